"""Reduced Java syntax model: declarations, if-structure and token streams.

The parser recognizes exactly what the change detectors need — package,
class/interface declarations with extends clauses, fields, methods, and
if-statements inside bodies. Every other construct collapses into an
opaque statement carrying its tokens and line range.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


class ParseError(Exception):
    """Source could not be reduced to the declaration model."""


JAVA_KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while true false null
    record""".split()
)

MODIFIER_KEYWORDS = frozenset(
    """public protected private static final abstract synchronized volatile
    transient native strictfp default""".split()
)

# Shift operators are deliberately absent: '<' and '>' always lex as
# single tokens so generic brackets like List<List<T>> stay countable.
_MULTI_OPS = (
    "...", "->", "::", "==", "!=", "<=", ">=",
    "&&", "||", "++", "--", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
)


@dataclass(frozen=True, slots=True)
class Token:
    text: str
    line: int
    kind: str  # ident | keyword | number | string | char | op

    @property
    def is_identifier(self) -> bool:
        return self.kind == "ident"


def tokenize(text: str) -> list[Token]:
    """Lex Java source, dropping comments and whitespace."""
    tokens: list[Token] = []
    i = 0
    line = 1
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            i += 1
        elif c in " \t\r\f":
            i += 1
        elif c == "/" and i + 1 < n and text[i + 1] == "/":
            while i < n and text[i] != "\n":
                i += 1
        elif c == "/" and i + 1 < n and text[i + 1] == "*":
            end = text.find("*/", i + 2)
            if end < 0:
                raise ParseError(f"unterminated block comment at line {line}")
            line += text.count("\n", i, end)
            i = end + 2
        elif c in "\"'":
            quote = c
            j = i + 1
            while j < n:
                if text[j] == "\\":
                    j += 2
                    continue
                if text[j] == quote:
                    break
                if text[j] == "\n":
                    raise ParseError(f"unterminated literal at line {line}")
                j += 1
            if j >= n:
                raise ParseError(f"unterminated literal at line {line}")
            kind = "string" if quote == '"' else "char"
            tokens.append(Token(text[i : j + 1], line, kind))
            i = j + 1
        elif c.isalpha() or c in "_$":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_$"):
                j += 1
            word = text[i:j]
            kind = "keyword" if word in JAVA_KEYWORDS else "ident"
            tokens.append(Token(word, line, kind))
            i = j
        elif c.isdigit():
            j = i
            while j < n and (text[j].isalnum() or text[j] in "._"):
                j += 1
            tokens.append(Token(text[i:j], line, "number"))
            i = j
        else:
            for op in _MULTI_OPS:
                if text.startswith(op, i):
                    tokens.append(Token(op, line, "op"))
                    i += len(op)
                    break
            else:
                tokens.append(Token(c, line, "op"))
                i += 1
    return tokens


@dataclass
class Statement:
    kind: str  # if | other
    range: tuple[int, int]
    tokens: list[Token] = field(default_factory=list)
    condition_tokens: list[Token] = field(default_factory=list)
    children: list[Statement] = field(default_factory=list)

    def token_texts(self) -> tuple[str, ...]:
        return tuple(t.text for t in self.tokens)


@dataclass
class FieldDecl:
    name: str
    declared_type: str
    modifiers: frozenset[str]
    initializer_tokens: list[Token]
    range: tuple[int, int]

    def initializer_texts(self) -> tuple[str, ...]:
        return tuple(t.text for t in self.initializer_tokens)


@dataclass
class MethodDecl:
    name: str
    parameter_types: tuple[str, ...]
    modifiers: frozenset[str]
    body_statements: list[Statement]
    range: tuple[int, int]
    signature_line: int
    tokens: list[Token] = field(default_factory=list)  # full declaration span
    body_tokens: list[Token] = field(default_factory=list)

    @property
    def signature(self) -> tuple[str, tuple[str, ...]]:
        return (self.name, self.parameter_types)


@dataclass
class TypeDecl:
    name: str
    kind: str  # class | interface
    extends_name: str | None
    modifiers: frozenset[str]
    fields: list[FieldDecl] = field(default_factory=list)
    methods: list[MethodDecl] = field(default_factory=list)
    range: tuple[int, int] = (1, 1)
    body_tokens: list[Token] = field(default_factory=list)


@dataclass
class SyntaxTree:
    package_name: str = ""
    types: list[TypeDecl] = field(default_factory=list)


def _match_bracket(tokens: list[Token], start: int, open_: str, close: str) -> int:
    """Index of the token closing the bracket opened at tokens[start]."""
    depth = 0
    for i in range(start, len(tokens)):
        t = tokens[i].text
        if t == open_:
            depth += 1
        elif t == close:
            depth -= 1
            if depth == 0:
                return i
    raise ParseError(
        f"unbalanced {open_!r} starting at line {tokens[start].line}"
    )


# Token texts that may legally appear inside a generic argument section.
_GENERIC_INNER = frozenset({".", ",", "?", "&", "[", "]", "<", ">", "@", "extends", "super"})


def _match_angle(tokens: list[Token], start: int) -> int | None:
    """Closing index if tokens[start] == '<' opens a generic section.

    Returns None when the run of tokens cannot be generics (e.g. a
    comparison or shift expression), so '<' falls back to operator.
    """
    depth = 0
    for i in range(start, len(tokens)):
        t = tokens[i]
        if t.text == "<":
            depth += 1
        elif t.text == ">":
            depth -= 1
            if depth == 0:
                return i
        elif t.is_identifier or t.text in _GENERIC_INNER:
            continue
        else:
            return None
    return None


def _skip_annotation(tokens: list[Token], i: int) -> int:
    """Advance past '@' Name(.Name)* and an optional argument list."""
    i += 1  # '@'
    while i < len(tokens) and (tokens[i].is_identifier or tokens[i].text == "interface"):
        i += 1
        if i < len(tokens) and tokens[i].text == ".":
            i += 1
            continue
        break
    if i < len(tokens) and tokens[i].text == "(":
        i = _match_bracket(tokens, i, "(", ")") + 1
    return i


def strip_annotations(tokens: list[Token]) -> list[Token]:
    """Token stream with annotation spans removed (used for matching)."""
    out: list[Token] = []
    i = 0
    while i < len(tokens):
        if tokens[i].text == "@":
            i = _skip_annotation(tokens, i)
        else:
            out.append(tokens[i])
            i += 1
    return out


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0

    def at_end(self) -> bool:
        return self.i >= len(self.toks)

    def peek(self, offset: int = 0) -> Token | None:
        j = self.i + offset
        return self.toks[j] if j < len(self.toks) else None

    def parse_unit(self) -> SyntaxTree:
        tree = SyntaxTree()
        self._parse_package(tree)
        self._skip_imports()
        while not self.at_end():
            self._parse_type_or_skip(tree.types)
        # Nested types finish parsing before their enclosing type does;
        # re-establish document order.
        tree.types.sort(key=lambda t: t.range[0])
        return tree

    def _parse_package(self, tree: SyntaxTree) -> None:
        while not self.at_end() and self.toks[self.i].text == "@":
            self.i = _skip_annotation(self.toks, self.i)
        if not self.at_end() and self.toks[self.i].text == "package":
            self.i += 1
            parts: list[str] = []
            while not self.at_end() and self.toks[self.i].text != ";":
                if self.toks[self.i].text != ".":
                    parts.append(self.toks[self.i].text)
                self.i += 1
            self.i += 1  # ';'
            tree.package_name = ".".join(parts)

    def _skip_imports(self) -> None:
        while not self.at_end() and self.toks[self.i].text == "import":
            while not self.at_end() and self.toks[self.i].text != ";":
                self.i += 1
            self.i += 1

    def _collect_modifiers(self) -> tuple[frozenset[str], int | None]:
        """Skip annotations, gather modifier keywords.

        Returns the modifiers and the index of the first modifier token
        (None if there were none)."""
        mods: set[str] = set()
        first: int | None = None
        while not self.at_end():
            t = self.toks[self.i]
            if t.text == "@":
                self.i = _skip_annotation(self.toks, self.i)
            elif t.text in MODIFIER_KEYWORDS:
                if first is None:
                    first = self.i
                mods.add(t.text)
                self.i += 1
            else:
                break
        return frozenset(mods), first

    def _parse_type_or_skip(self, out: list[TypeDecl]) -> None:
        mods, first = self._collect_modifiers()
        if self.at_end():
            return
        t = self.toks[self.i]
        if t.text in ("class", "interface"):
            out.append(self._parse_type(mods, first, out))
        elif t.text in ("enum", "record"):
            self._skip_past_block()
        elif t.text == ";":
            self.i += 1
        else:
            self.i += 1

    def _skip_past_block(self) -> None:
        while not self.at_end() and self.toks[self.i].text not in ("{", ";"):
            self.i += 1
        if not self.at_end() and self.toks[self.i].text == "{":
            self.i = _match_bracket(self.toks, self.i, "{", "}") + 1
        elif not self.at_end():
            self.i += 1

    def _parse_type(
        self, mods: frozenset[str], first: int | None, all_types: list[TypeDecl]
    ) -> TypeDecl:
        start_index = first if first is not None else self.i
        start_line = self.toks[start_index].line
        kind = self.toks[self.i].text
        self.i += 1
        if self.at_end() or not self.toks[self.i].is_identifier:
            raise ParseError(f"expected type name at line {start_line}")
        name = self.toks[self.i].text
        self.i += 1

        extends_name: str | None = None
        while not self.at_end() and self.toks[self.i].text != "{":
            if self.toks[self.i].text == "extends":
                self.i += 1
                extends_name = self._read_simple_type_name()
            else:
                close = (
                    _match_angle(self.toks, self.i)
                    if self.toks[self.i].text == "<"
                    else None
                )
                self.i = close + 1 if close is not None else self.i + 1
        if self.at_end():
            raise ParseError(f"type {name} has no body")

        body_open = self.i
        body_close = _match_bracket(self.toks, body_open, "{", "}")
        decl = TypeDecl(
            name=name,
            kind=kind,
            extends_name=extends_name,
            modifiers=mods,
            range=(start_line, self.toks[body_close].line),
            body_tokens=strip_annotations(self.toks[body_open + 1 : body_close]),
        )
        self.i = body_open + 1
        while self.i < body_close:
            self._parse_member(decl, body_close, all_types)
        self.i = body_close + 1
        return decl

    def _read_simple_type_name(self) -> str:
        """Last identifier of a possibly qualified type, generics dropped."""
        name = ""
        while not self.at_end():
            t = self.toks[self.i]
            if t.is_identifier:
                name = t.text
                self.i += 1
                if not self.at_end() and self.toks[self.i].text == ".":
                    self.i += 1
                    continue
                if not self.at_end() and self.toks[self.i].text == "<":
                    close = _match_angle(self.toks, self.i)
                    if close is not None:
                        self.i = close + 1
                break
            break
        return name

    def _parse_member(
        self, owner: TypeDecl, body_close: int, all_types: list[TypeDecl]
    ) -> None:
        if self.toks[self.i].text == ";":
            self.i += 1
            return
        mods, first = self._collect_modifiers()
        if self.i >= body_close:
            return
        t = self.toks[self.i]
        if t.text in ("class", "interface"):
            all_types.append(self._parse_type(mods, first, all_types))
            return
        if t.text in ("enum", "record"):
            self._skip_past_block()
            return
        if t.text == "{":  # instance or static initializer
            self.i = _match_bracket(self.toks, self.i, "{", "}") + 1
            return

        start_index = first if first is not None else self.i
        # Decide member shape by the first structural token.
        j = self.i
        decider = None
        while j < body_close:
            text = self.toks[j].text
            if text in ("(", "=", ";"):
                decider = text
                break
            if text == "<":
                close = _match_angle(self.toks, j)
                j = close + 1 if close is not None else j + 1
                continue
            if text == "{":
                decider = "{"
                break
            j += 1
        if decider == "(":
            self._parse_method(owner, mods, start_index, j)
        elif decider in ("=", ";"):
            self._parse_field(owner, mods, start_index)
        else:
            # Unrecognized construct; skip a token to keep moving.
            self.i += 1

    def _parse_method(
        self, owner: TypeDecl, mods: frozenset[str], start_index: int, paren_index: int
    ) -> None:
        name_tok = self.toks[paren_index - 1]
        params_close = _match_bracket(self.toks, paren_index, "(", ")")
        parameter_types = _parameter_types(self.toks[paren_index + 1 : params_close])

        self.i = params_close + 1
        while not self.at_end() and self.toks[self.i].text not in ("{", ";"):
            self.i += 1
        if self.at_end():
            raise ParseError(f"method {name_tok.text} has no body or ';'")

        if self.toks[self.i].text == ";":
            end_index = self.i
            body_statements: list[Statement] = []
            body_tokens: list[Token] = []
            self.i += 1
        else:
            body_open = self.i
            end_index = _match_bracket(self.toks, body_open, "{", "}")
            body_tokens = strip_annotations(self.toks[body_open + 1 : end_index])
            body_statements = _parse_statements(body_tokens)
            self.i = end_index + 1

        start_line = self.toks[start_index].line
        owner.methods.append(
            MethodDecl(
                name=name_tok.text,
                parameter_types=parameter_types,
                modifiers=mods,
                body_statements=body_statements,
                range=(start_line, self.toks[end_index].line),
                signature_line=start_line,
                tokens=strip_annotations(self.toks[start_index : end_index + 1]),
                body_tokens=body_tokens,
            )
        )

    def _parse_field(
        self, owner: TypeDecl, mods: frozenset[str], start_index: int
    ) -> None:
        # Type tokens run up to the last identifier before '=', ',' or ';'.
        decl_tokens: list[Token] = []
        while not self.at_end():
            t = self.toks[self.i]
            if t.text in ("=", ",", ";"):
                break
            if t.text == "<":
                close = _match_angle(self.toks, self.i)
                if close is not None:
                    decl_tokens.extend(self.toks[self.i : close + 1])
                    self.i = close + 1
                    continue
            decl_tokens.append(t)
            self.i += 1
        if not decl_tokens or not decl_tokens[-1].is_identifier:
            raise ParseError(
                f"malformed field declaration at line {self.toks[start_index].line}"
            )
        declared_type = " ".join(t.text for t in decl_tokens[:-1])
        names = [decl_tokens[-1].text]
        initializers: dict[str, list[Token]] = {names[0]: []}

        while not self.at_end() and self.toks[self.i].text != ";":
            if self.toks[self.i].text == "=":
                self.i += 1
                init: list[Token] = []
                depth = 0
                while not self.at_end():
                    t = self.toks[self.i]
                    if depth == 0 and t.text in (",", ";"):
                        break
                    if t.text == "<":
                        close = _match_angle(self.toks, self.i)
                        if close is not None:
                            init.extend(self.toks[self.i : close + 1])
                            self.i = close + 1
                            continue
                    if t.text in "([{":
                        depth += 1
                    elif t.text in ")]}":
                        depth -= 1
                    init.append(t)
                    self.i += 1
                initializers[names[-1]] = strip_annotations(init)
            elif self.toks[self.i].text == ",":
                self.i += 1
                if not self.at_end() and self.toks[self.i].is_identifier:
                    names.append(self.toks[self.i].text)
                    initializers[names[-1]] = []
                    self.i += 1
            else:
                self.i += 1
        end_index = self.i
        self.i += 1  # ';'
        line_range = (self.toks[start_index].line, self.toks[end_index].line)
        for name in names:
            owner.fields.append(
                FieldDecl(
                    name=name,
                    declared_type=declared_type,
                    modifiers=mods,
                    initializer_tokens=initializers[name],
                    range=line_range,
                )
            )


def _parameter_types(tokens: list[Token]) -> tuple[str, ...]:
    tokens = strip_annotations(tokens)
    if not tokens:
        return ()
    params: list[list[Token]] = [[]]
    depth = 0
    for t in tokens:
        if t.text in ("<", "(", "["):
            depth += 1
        elif t.text in (">", ")", "]"):
            depth -= 1
        if t.text == "," and depth == 0:
            params.append([])
        else:
            params[-1].append(t)
    types: list[str] = []
    for p in params:
        p = [t for t in p if t.text != "final"]
        if not p:
            continue
        if len(p) > 1 and p[-1].is_identifier:
            p = p[:-1]
        types.append(" ".join(t.text for t in p))
    return tuple(types)


_BLOCK_CONTINUERS = frozenset({"else", "catch", "finally", "while"})


def _parse_statements(tokens: list[Token]) -> list[Statement]:
    statements: list[Statement] = []
    i = 0
    while i < len(tokens):
        if tokens[i].text == ";":
            i += 1
            continue
        stmt, i = _parse_one_statement(tokens, i)
        if stmt is not None:
            statements.append(stmt)
    return statements


def _parse_one_statement(tokens: list[Token], i: int) -> tuple[Statement | None, int]:
    if i >= len(tokens):
        return None, i
    if tokens[i].text == "if":
        return _parse_if(tokens, i)
    return _parse_other(tokens, i)


def _parse_if(tokens: list[Token], i: int) -> tuple[Statement, int]:
    start_line = tokens[i].line
    i += 1
    condition: list[Token] = []
    if i < len(tokens) and tokens[i].text == "(":
        close = _match_bracket(tokens, i, "(", ")")
        condition = tokens[i + 1 : close]
        i = close + 1
    children: list[Statement] = []
    end_line = start_line
    i, end_line = _parse_branch(tokens, i, children, end_line)
    while i < len(tokens) and tokens[i].text == "else":
        i += 1
        if i < len(tokens) and tokens[i].text == "if":
            nested, i = _parse_if(tokens, i)
            children.append(nested)
            end_line = max(end_line, nested.range[1])
        else:
            i, end_line = _parse_branch(tokens, i, children, end_line)
    stmt = Statement(
        kind="if",
        range=(start_line, end_line),
        tokens=[],
        condition_tokens=condition,
        children=children,
    )
    stmt.tokens = _collect_subtree_tokens(stmt)
    return stmt, i


def _parse_branch(
    tokens: list[Token], i: int, children: list[Statement], end_line: int
) -> tuple[int, int]:
    if i < len(tokens) and tokens[i].text == "{":
        close = _match_bracket(tokens, i, "{", "}")
        children.extend(_parse_statements(tokens[i + 1 : close]))
        end_line = max(end_line, tokens[close].line)
        i = close + 1
    elif i < len(tokens):
        stmt, i = _parse_one_statement(tokens, i)
        if stmt is not None:
            children.append(stmt)
            end_line = max(end_line, stmt.range[1])
    return i, end_line


def _parse_other(tokens: list[Token], i: int) -> tuple[Statement, int]:
    start_line = tokens[i].line
    own: list[Token] = []
    children: list[Statement] = []
    end_line = start_line
    while i < len(tokens):
        t = tokens[i]
        if t.text == ";":
            own.append(t)
            end_line = max(end_line, t.line)
            i += 1
            break
        if t.text == "(":
            close = _match_bracket(tokens, i, "(", ")")
            own.extend(tokens[i : close + 1])
            end_line = max(end_line, tokens[close].line)
            i = close + 1
            continue
        if t.text == "{":
            close = _match_bracket(tokens, i, "{", "}")
            children.extend(_parse_statements(tokens[i + 1 : close]))
            own.append(t)
            own.append(tokens[close])
            end_line = max(end_line, tokens[close].line)
            i = close + 1
            nxt = tokens[i].text if i < len(tokens) else None
            if nxt == ";":
                own.append(tokens[i])
                i += 1
                break
            if nxt in _BLOCK_CONTINUERS:
                own.append(tokens[i])
                end_line = max(end_line, tokens[i].line)
                i += 1
                continue
            break
        own.append(t)
        end_line = max(end_line, t.line)
        i += 1
    stmt = Statement(kind="other", range=(start_line, end_line), children=children)
    stmt.tokens = own + [t for c in children for t in c.tokens]
    return stmt, i


def _collect_subtree_tokens(stmt: Statement) -> list[Token]:
    out = list(stmt.condition_tokens)
    for child in stmt.children:
        out.extend(child.tokens)
    return out


def parse_compilation_unit(text: str) -> SyntaxTree:
    """Parse Java source into the reduced declaration tree.

    Raises ParseError when the source cannot be bracket-matched; callers
    degrade that file to textual-only classification.
    """
    return _Parser(tokenize(text)).parse_unit()


def walk_ifs(statements: list[Statement]) -> list[Statement]:
    """All if-statements in evaluation order, at any nesting depth."""
    found: list[Statement] = []
    for stmt in statements:
        if stmt.kind == "if":
            found.append(stmt)
        found.extend(walk_ifs(stmt.children))
    return found


def walk_statements(statements: list[Statement]) -> list[Statement]:
    found: list[Statement] = []
    for stmt in statements:
        found.append(stmt)
        found.extend(walk_statements(stmt.children))
    return found


def dice_similarity(a: list[Token] | list[str], b: list[Token] | list[str]) -> float:
    """Dice coefficient over token-text multisets."""
    texts_a = Counter(t.text if isinstance(t, Token) else t for t in a)
    texts_b = Counter(t.text if isinstance(t, Token) else t for t in b)
    total = sum(texts_a.values()) + sum(texts_b.values())
    if total == 0:
        return 1.0
    overlap = sum((texts_a & texts_b).values())
    return 2.0 * overlap / total


@dataclass(frozen=True, slots=True)
class DeclPair:
    pre: object
    post: object
    matched_by: str  # name | signature | similarity | type_init


@dataclass
class DeclarationMapping:
    type_pairs: list[DeclPair] = field(default_factory=list)
    field_pairs: list[DeclPair] = field(default_factory=list)
    method_pairs: list[DeclPair] = field(default_factory=list)
    unmatched_pre: list[object] = field(default_factory=list)
    unmatched_post: list[object] = field(default_factory=list)


DICE_THRESHOLD = 0.5


def _greedy_similarity_pairs(
    pre_items: list, post_items: list, token_getter
) -> list[tuple[object, object]]:
    scored = []
    for p in pre_items:
        for q in post_items:
            score = dice_similarity(token_getter(p), token_getter(q))
            if score >= DICE_THRESHOLD:
                scored.append((-score, p.name, q.name, p, q))
    scored.sort(key=lambda s: s[:3])
    used_pre: set[int] = set()
    used_post: set[int] = set()
    pairs = []
    for _, _, _, p, q in scored:
        if id(p) in used_pre or id(q) in used_post:
            continue
        used_pre.add(id(p))
        used_post.add(id(q))
        pairs.append((p, q))
    return pairs


def match_declarations(pre: SyntaxTree, post: SyntaxTree) -> DeclarationMapping:
    """Pair declarations across the two file versions.

    Types pair by name, then by body Dice >= 0.5; methods by (name,
    parameter types), then body Dice within the matched type; fields by
    name, then by (declared type, initializer) equality.
    """
    mapping = DeclarationMapping()

    pre_types = list(pre.types)
    post_types = list(post.types)
    by_name = {t.name: t for t in post_types}
    leftover_post = list(post_types)
    leftover_pre = []
    for t in pre_types:
        q = by_name.pop(t.name, None)
        if q is not None and q in leftover_post:
            mapping.type_pairs.append(DeclPair(t, q, "name"))
            leftover_post.remove(q)
        else:
            leftover_pre.append(t)
    for p, q in _greedy_similarity_pairs(
        leftover_pre, leftover_post, lambda t: t.body_tokens
    ):
        mapping.type_pairs.append(DeclPair(p, q, "similarity"))
        leftover_pre.remove(p)
        leftover_post.remove(q)
    mapping.unmatched_pre.extend(leftover_pre)
    mapping.unmatched_post.extend(leftover_post)

    for pair in list(mapping.type_pairs):
        _match_members(pair.pre, pair.post, mapping)
    return mapping


def _match_members(pre_t: TypeDecl, post_t: TypeDecl, mapping: DeclarationMapping) -> None:
    # Methods: signature first, body similarity second.
    post_by_sig: dict[tuple, list[MethodDecl]] = {}
    for m in post_t.methods:
        post_by_sig.setdefault(m.signature, []).append(m)
    pre_left: list[MethodDecl] = []
    post_left = list(post_t.methods)
    for m in pre_t.methods:
        bucket = post_by_sig.get(m.signature)
        if bucket:
            q = bucket.pop(0)
            mapping.method_pairs.append(DeclPair(m, q, "signature"))
            post_left.remove(q)
        else:
            pre_left.append(m)
    for p, q in _greedy_similarity_pairs(pre_left, post_left, lambda m: m.body_tokens):
        mapping.method_pairs.append(DeclPair(p, q, "similarity"))
        pre_left.remove(p)
        post_left.remove(q)
    mapping.unmatched_pre.extend(pre_left)
    mapping.unmatched_post.extend(post_left)

    # Fields: name first, (type, initializer) equality second.
    post_by_name = {f.name: f for f in post_t.fields}
    pre_fields_left: list[FieldDecl] = []
    post_fields_left = list(post_t.fields)
    for f in pre_t.fields:
        q = post_by_name.get(f.name)
        if q is not None and q in post_fields_left:
            mapping.field_pairs.append(DeclPair(f, q, "name"))
            post_fields_left.remove(q)
        else:
            pre_fields_left.append(f)
    for f in list(pre_fields_left):
        for q in post_fields_left:
            if (
                f.declared_type == q.declared_type
                and f.initializer_texts() == q.initializer_texts()
            ):
                mapping.field_pairs.append(DeclPair(f, q, "type_init"))
                pre_fields_left.remove(f)
                post_fields_left.remove(q)
                break
    mapping.unmatched_pre.extend(pre_fields_left)
    mapping.unmatched_post.extend(post_fields_left)
