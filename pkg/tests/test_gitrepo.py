from concurrent.futures import ThreadPoolExecutor

import pytest

from changeprism.gitrepo import (
    NotARepository,
    UnknownBranch,
    UnknownCommit,
    changed_files,
    commit_meta,
    list_commits,
    read_file_at,
)
from repo_fixtures import build_scripted_repo, init_repo


@pytest.fixture
def three_commit_repo(tmp_path):
    # The scripted plan is the oracle the results are compared against.
    plan = [
        ("first", {"src/A.java": "class A {\n}\n", "notes.txt": "x\n"}),
        ("second", {"src/B.java": "class B {\n}\n"}),
        ("third", {"src/A.java": "class A {\n    int x;\n}\n"}),
    ]
    shas = build_scripted_repo(tmp_path / "repo", plan)
    return tmp_path / "repo", shas, plan


class TestListCommits:
    def test_three_sequential_commits_in_commit_order(self, three_commit_repo):
        repo, shas, plan = three_commit_repo
        commits = list_commits(repo)
        assert [c.sha for c in commits] == shas
        assert [c.message for c in commits] == [m for m, _ in plan]
        assert all(len(c.sha) == 40 for c in commits)
        assert all(c.short_sha == c.sha[:7] for c in commits)
        timestamps = [c.timestamp for c in commits]
        assert timestamps == sorted(timestamps)

    def test_parent_links_form_first_parent_chain(self, three_commit_repo):
        repo, shas, _ = three_commit_repo
        commits = list_commits(repo)
        assert commits[0].parent_shas == ()
        assert commits[1].parent_shas == (shas[0],)
        assert commits[2].parent_shas == (shas[1],)

    def test_limit_one_returns_single_record(self, three_commit_repo):
        repo, shas, _ = three_commit_repo
        commits = list_commits(repo, limit=1)
        assert len(commits) == 1
        # The walked window holds only the branch tip.
        assert commits[0].sha == shas[-1]

    def test_empty_repository_gives_empty_list(self, tmp_path):
        repo = init_repo(tmp_path / "empty")
        assert list_commits(repo) == []

    def test_not_a_repository(self, tmp_path):
        with pytest.raises(NotARepository):
            list_commits(tmp_path / "nowhere")

    def test_unknown_branch(self, three_commit_repo):
        repo, _, _ = three_commit_repo
        with pytest.raises(UnknownBranch):
            list_commits(repo, branch="no-such-branch")

    def test_named_branch(self, three_commit_repo):
        repo, shas, _ = three_commit_repo
        assert [c.sha for c in list_commits(repo, branch="main")] == shas


class TestChangedFiles:
    def test_added_file(self, three_commit_repo):
        repo, shas, _ = three_commit_repo
        (fc,) = changed_files(repo, shas[1])
        assert fc.status == "added"
        assert fc.path_pre is None
        assert fc.path_post == "src/B.java"
        assert fc.text_pre == ""
        assert fc.text_post == "class B {\n}\n"

    def test_root_commit_diffs_against_empty_tree(self, three_commit_repo):
        repo, shas, _ = three_commit_repo
        (fc,) = changed_files(repo, shas[0])
        assert fc.status == "added"
        assert fc.path_post == "src/A.java"

    def test_non_java_files_filtered(self, three_commit_repo):
        repo, shas, _ = three_commit_repo
        paths = [fc.display_path for fc in changed_files(repo, shas[0])]
        assert paths == ["src/A.java"]

    def test_two_edits_sorted_by_path(self, tmp_path):
        plan = [
            ("base", {"b/Z.java": "class Z {\n}\n", "a/Y.java": "class Y {\n}\n"}),
            ("touch both", {
                "b/Z.java": "class Z {\n    int q;\n}\n",
                "a/Y.java": "class Y {\n    int p;\n}\n",
            }),
        ]
        shas = build_scripted_repo(tmp_path / "repo", plan)
        fcs = changed_files(tmp_path / "repo", shas[1])
        assert [fc.display_path for fc in fcs] == ["a/Y.java", "b/Z.java"]
        assert all(fc.status == "modified" for fc in fcs)

    def test_exact_blob_rename_detected(self, tmp_path):
        body = "class R {\n    void f() {}\n}\n"
        plan = [
            ("base", {"old/R.java": body}),
            ("move", {"old/R.java": None, "fresh/R.java": body}),
        ]
        shas = build_scripted_repo(tmp_path / "repo", plan)
        (fc,) = changed_files(tmp_path / "repo", shas[1])
        assert fc.status == "renamed"
        assert (fc.path_pre, fc.path_post) == ("old/R.java", "fresh/R.java")

    def test_edited_move_is_delete_plus_add(self, tmp_path):
        plan = [
            ("base", {"old/R.java": "class R {\n}\n"}),
            ("move+edit", {"old/R.java": None, "fresh/R.java": "class R {\n    int x;\n}\n"}),
        ]
        shas = build_scripted_repo(tmp_path / "repo", plan)
        fcs = changed_files(tmp_path / "repo", shas[1])
        assert sorted(fc.status for fc in fcs) == ["added", "deleted"]

    def test_unknown_commit(self, three_commit_repo):
        repo, _, _ = three_commit_repo
        with pytest.raises(UnknownCommit):
            changed_files(repo, "0" * 40)

    def test_crlf_normalized(self, tmp_path):
        repo = init_repo(tmp_path / "repo")
        (repo / "W.java").write_bytes(b"class W {\r\n}\r\n")
        from repo_fixtures import commit_all

        sha = commit_all(repo, "crlf", 1609459200)
        (fc,) = changed_files(repo, sha)
        assert fc.text_post == "class W {\n}\n"

    def test_custom_extension_allowlist(self, tmp_path):
        plan = [("mix", {"a.java": "class A {}\n", "b.kt": "class B\n"})]
        shas = build_scripted_repo(tmp_path / "repo", plan)
        fcs = changed_files(tmp_path / "repo", shas[0], extensions=("kt",))
        assert [fc.display_path for fc in fcs] == ["b.kt"]


class TestCommitMeta:
    def test_meta_matches_list_entry(self, three_commit_repo):
        repo, shas, _ = three_commit_repo
        listed = list_commits(repo)[1]
        assert commit_meta(repo, shas[1]) == listed

    def test_unknown_sha(self, three_commit_repo):
        repo, _, _ = three_commit_repo
        with pytest.raises(UnknownCommit):
            commit_meta(repo, "f" * 40)


class TestReadFileAt:
    def test_reads_blob(self, three_commit_repo):
        repo, shas, _ = three_commit_repo
        assert read_file_at(repo, shas[0], "src/A.java") == "class A {\n}\n"

    def test_absent_path_is_none(self, three_commit_repo):
        repo, shas, _ = three_commit_repo
        assert read_file_at(repo, shas[0], "src/B.java") is None


class TestConcurrency:
    def test_concurrent_reads_match_sequential(self, three_commit_repo):
        repo, shas, _ = three_commit_repo
        sequential = [changed_files(repo, sha) for sha in shas]
        with ThreadPoolExecutor(max_workers=4) as pool:
            concurrent = list(pool.map(lambda s: changed_files(repo, s), shas))
        assert concurrent == sequential
