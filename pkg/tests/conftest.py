import pytest

from repo_fixtures import build_casestudy_repo


@pytest.fixture(scope="session")
def casestudy_repo(tmp_path_factory):
    repo = tmp_path_factory.mktemp("casestudy") / "repo"
    shas = build_casestudy_repo(repo)
    return repo, shas
