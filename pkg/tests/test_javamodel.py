import textwrap

import pytest

from changeprism.javamodel import (
    ParseError,
    dice_similarity,
    match_declarations,
    parse_compilation_unit,
    tokenize,
    walk_ifs,
    walk_statements,
)


def parse(source):
    return parse_compilation_unit(textwrap.dedent(source).lstrip("\n"))


class TestTokenizer:
    def test_comments_and_whitespace_dropped(self):
        toks = tokenize("int a; // trailing\n/* block\n comment */ int b;")
        assert [t.text for t in toks] == ["int", "a", ";", "int", "b", ";"]
        assert toks[3].line == 3

    def test_string_and_char_literals(self):
        toks = tokenize('x = "a // not a comment"; c = \'"\';')
        texts = [t.text for t in toks]
        assert '"a // not a comment"' in texts
        assert "'\"'" in texts

    def test_nested_generics_lex_as_single_angles(self):
        toks = tokenize("Map<String, List<Integer>> m;")
        assert [t.text for t in toks].count(">") == 2

    def test_unterminated_comment_raises(self):
        with pytest.raises(ParseError):
            tokenize("int a; /* oops")

    def test_identifier_classification(self):
        toks = tokenize("volatile listeners null")
        assert [t.kind for t in toks] == ["keyword", "ident", "keyword"]


class TestParser:
    def test_minimal_class(self):
        tree = parse("class A {}")
        assert len(tree.types) == 1
        t = tree.types[0]
        assert t.name == "A"
        assert t.range == (1, 1)
        assert t.fields == [] and t.methods == []

    def test_package_and_extends(self):
        tree = parse(
            """
            package net.example.core;

            public class Child extends base.Parent<String> {
            }
            """
        )
        assert tree.package_name == "net.example.core"
        assert tree.types[0].extends_name == "Parent"

    def test_modifiers_on_field_and_method(self):
        # Hand-checked 10-line fixture.
        tree = parse(
            """
            public class Box {

                private volatile int hits = 0;

                public synchronized int take() {
                    hits = hits + 1;
                    return hits;
                }

            }
            """
        )
        t = tree.types[0]
        assert "volatile" in t.fields[0].modifiers
        assert "synchronized" in t.methods[0].modifiers
        assert t.fields[0].range == (3, 3)
        assert t.methods[0].range == (5, 8)
        assert t.methods[0].signature_line == 5

    def test_if_statement_structure(self):
        source = """
            class C {
                java.util.List<String> getAll() {
                    if (cache == null) {
                        cache = build();
                    }
                    return cache;
                }
            }
            """
        tree = parse(source)
        method = tree.types[0].methods[0]
        ifs = walk_ifs(method.body_statements)
        assert len(ifs) == 1
        # Hand-annotated: 'if' opens on line 3, closes on line 5.
        assert ifs[0].range == (3, 5)
        assert [t.text for t in ifs[0].condition_tokens] == ["cache", "==", "null"]
        assert len(ifs[0].children) == 1

    def test_else_if_chain_collects_children(self):
        tree = parse(
            """
            class C {
                void f(int x) {
                    if (x > 0) {
                        a();
                    } else if (x < 0) {
                        b();
                    } else {
                        c();
                    }
                }
            }
            """
        )
        method = tree.types[0].methods[0]
        ifs = walk_ifs(method.body_statements)
        assert len(ifs) == 2  # outer + else-if
        assert ifs[0].range == (3, 9)

    def test_braceless_if_body(self):
        tree = parse(
            """
            class C {
                void f() {
                    if (ready) run();
                }
            }
            """
        )
        ifs = walk_ifs(tree.types[0].methods[0].body_statements)
        assert len(ifs) == 1
        assert ifs[0].range == (3, 3)
        assert ifs[0].children[0].token_texts() == ("run", "(", ")", ";")

    def test_statements_inside_loops_are_discovered(self):
        tree = parse(
            """
            class C {
                void f() {
                    for (int i = 0; i < 3; i++) {
                        if (i == 1) {
                            skip();
                        }
                    }
                }
            }
            """
        )
        method = tree.types[0].methods[0]
        assert len(walk_ifs(method.body_statements)) == 1

    def test_constructor_and_overloads(self):
        tree = parse(
            """
            class Pair {
                Pair() {}
                void set(int a) {}
                void set(int a, int b) {}
            }
            """
        )
        methods = tree.types[0].methods
        assert [(m.name, m.parameter_types) for m in methods] == [
            ("Pair", ()),
            ("set", ("int",)),
            ("set", ("int", "int")),
        ]

    def test_multi_declarator_field(self):
        tree = parse("class C { int a, b = 2; }")
        fields = tree.types[0].fields
        assert [f.name for f in fields] == ["a", "b"]
        assert fields[1].initializer_texts() == ("2",)
        assert fields[0].declared_type == "int"

    def test_nested_type_is_flattened_with_contained_range(self):
        tree = parse(
            """
            class Outer {
                int x;
                class Inner {
                    int y;
                }
            }
            """
        )
        names = [t.name for t in tree.types]
        assert names == ["Outer", "Inner"]
        outer, inner = tree.types
        assert outer.range[0] <= inner.range[0] <= inner.range[1] <= outer.range[1]
        assert [f.name for f in inner.fields] == ["y"]

    def test_annotations_do_not_shift_ranges(self):
        tree = parse(
            """
            class C {
                @Override
                public void run() {
                }
            }
            """
        )
        method = tree.types[0].methods[0]
        assert method.range == (3, 4)
        assert method.signature_line == 3

    def test_unbalanced_braces_raise_parse_error(self):
        with pytest.raises(ParseError):
            parse("class A { void f() { ")

    def test_member_ranges_contained_in_type_range(self):
        tree = parse(
            """
            package p;
            public class Wide {
                static final String NAME = "w";
                Wide(int seed) { this.seed = seed; }
                int seed;
                void a() { if (seed > 0) { seed--; } }
                void b() { a(); }
            }
            """
        )
        t = tree.types[0]
        lo, hi = t.range
        for decl in [*t.fields, *t.methods]:
            assert lo <= decl.range[0] <= decl.range[1] <= hi
        for m in t.methods:
            for stmt in walk_statements(m.body_statements):
                assert m.range[0] <= stmt.range[0] <= stmt.range[1] <= m.range[1]

    def test_declared_ranges_contain_name_token(self):
        source = textwrap.dedent(
            """
            class Named {
                int counter = 0;
                void bump() { counter++; }
            }
            """
        ).lstrip("\n")
        tree = parse_compilation_unit(source)
        lines = source.split("\n")
        t = tree.types[0]
        for decl in [t, *t.fields, *t.methods]:
            covered = "\n".join(lines[decl.range[0] - 1 : decl.range[1]])
            assert decl.name in covered


class TestDice:
    def test_identical_is_one(self):
        assert dice_similarity(["a", "b"], ["a", "b"]) == 1.0

    def test_disjoint_is_zero(self):
        assert dice_similarity(["a"], ["b"]) == 0.0

    def test_both_empty_is_one(self):
        assert dice_similarity([], []) == 1.0


PRE_SOURCE = """
class Registry {
    private java.util.List<String> generatedListeners = new java.util.ArrayList<String>();
    int size;
    void grow() { size = size + 1; }
    void gone() { size = 0; }
}
"""

POST_RENAMED_FIELD = """
class Registry {
    private java.util.List<String> listeners = new java.util.ArrayList<String>();
    int size;
    void grow() { size = size + 1; }
}
"""


class TestMatching:
    def test_identical_trees_fully_paired(self):
        pre = parse(PRE_SOURCE)
        post = parse(PRE_SOURCE)
        mapping = match_declarations(pre, post)
        assert mapping.unmatched_pre == [] and mapping.unmatched_post == []
        assert len(mapping.type_pairs) == 1
        assert len(mapping.field_pairs) == 2
        assert len(mapping.method_pairs) == 2
        assert all(p.matched_by in ("name", "signature") for p in mapping.type_pairs)

    def test_renamed_field_matches_via_type_init_fallback(self):
        mapping = match_declarations(parse(PRE_SOURCE), parse(POST_RENAMED_FIELD))
        fallback = [p for p in mapping.field_pairs if p.matched_by == "type_init"]
        assert len(fallback) == 1
        assert fallback[0].pre.name == "generatedListeners"
        assert fallback[0].post.name == "listeners"

    def test_deleted_method_lands_in_unmatched_pre(self):
        mapping = match_declarations(parse(PRE_SOURCE), parse(POST_RENAMED_FIELD))
        gone = [d for d in mapping.unmatched_pre if getattr(d, "name", "") == "gone"]
        assert len(gone) == 1
        assert all(getattr(d, "name", "") != "gone" for d in mapping.unmatched_post)

    def test_renamed_method_matches_by_body_similarity(self):
        pre = parse("class C { void a() { x = 1; y = 2; z = x + y; } }")
        post = parse("class C { void b() { x = 1; y = 2; z = x + y; } }")
        mapping = match_declarations(pre, post)
        sim = [p for p in mapping.method_pairs if p.matched_by == "similarity"]
        assert len(sim) == 1

    def test_renamed_type_matches_by_body_similarity(self):
        pre = parse("class Old { int a; void f() { a = 1; } }")
        post = parse("class New { int a; void f() { a = 1; } }")
        mapping = match_declarations(pre, post)
        assert len(mapping.type_pairs) == 1
        assert mapping.type_pairs[0].matched_by == "similarity"

    def test_pair_cardinality_bounded(self):
        pre = parse(PRE_SOURCE)
        post = parse(POST_RENAMED_FIELD)
        mapping = match_declarations(pre, post)
        assert len(mapping.field_pairs) <= min(len(pre.types[0].fields), len(post.types[0].fields))
        assert len(mapping.method_pairs) <= min(len(pre.types[0].methods), len(post.types[0].methods))

    def test_self_match_pairs_every_declaration_with_itself(self):
        tree = parse(PRE_SOURCE)
        mapping = match_declarations(tree, tree)
        for pair in [*mapping.type_pairs, *mapping.field_pairs, *mapping.method_pairs]:
            assert pair.pre is pair.post
        assert not mapping.unmatched_pre and not mapping.unmatched_post
