"""Line-oriented structure-constant files.

::

    # comments run to the end of the line
    field Q                      (or: field Fp 5)
    space C2 1 g                 (atomic space and its basis labels)
    map C2.mult : C2*C2 -> C2    (space expressions; "k" is the ground field)
    1 1*1 1                      (row label, column label, value)
    g 1*g 1
    end
    bialgebra kC2 mult=C2.mult unit=C2.unit comult=C2.comult counit=C2.counit

Omitted entries are zero.  Values are integers or ``num/den``.  Bundle kinds:
``bialgebra``, ``candidate``, ``lr-object``, ``yd``, ``double-biproduct-input``
and ``morphism``; optional action/coaction keys default to the trivial ones.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .linfield import K, BasedSpace, Field, FieldError, LinMap, tensor_spaces
from .hopf import (ActionPair, AlgebraData, BialgebraData, CoactionPair, CoalgebraData,
                   trivial_actions, trivial_coactions)

__all__ = [
    "ParseError", "FormatSyntaxError", "UnresolvedName", "ShapeMismatchError",
    "NonPrimeField", "MalformedScalar", "DuplicateName",
    "Bundle", "StructureFile", "parse_structure_file", "load", "serialize", "BUNDLE_KEYS",
]


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0):
        super().__init__(f"line {line}, col {col}: {msg}")
        self.msg, self.line, self.col = msg, line, col


class FormatSyntaxError(ParseError):
    pass


class UnresolvedName(ParseError):
    def __init__(self, name: str, line: int = 0, col: int = 0, what: str = "name"):
        super().__init__(f"unresolved {what} {name!r}", line, col)
        self.name = name


class ShapeMismatchError(ParseError):
    pass


class NonPrimeField(ParseError):
    pass


class MalformedScalar(ParseError):
    pass


class DuplicateName(ParseError):
    pass


_REQUIRED = {
    "bialgebra": ("mult", "unit", "comult", "counit"),
    "candidate": ("H", "mult", "unit", "comult", "counit"),
    "lr-object": ("H", "carrier"),
    "yd": ("H", "side", "action", "coaction"),
    "double-biproduct-input": ("H", "A", "B"),
    "morphism": ("map", "source", "target"),
}
_OPTIONAL = {
    "bialgebra": (),
    "candidate": ("left-action", "right-action", "left-coaction", "right-coaction"),
    "lr-object": ("left-action", "right-action", "left-coaction", "right-coaction"),
    "yd": ("mult", "unit", "comult", "counit"),
    "double-biproduct-input": (),
    "morphism": (),
}
BUNDLE_KEYS = {k: _REQUIRED[k] + _OPTIONAL[k] for k in _REQUIRED}

_SCALAR = re.compile(r"^-?\d+(/\d+)?$")
_NAME = re.compile(r"^[A-Za-z0-9_.\-#]+$")


@dataclass
class Bundle:
    kind: str
    name: str
    args: dict                  # key -> referenced name (or a literal for "side")
    line: int = 0
    cols: dict = dc_field(default_factory=dict)


@dataclass
class StructureFile:
    field: Field
    spaces: dict = dc_field(default_factory=dict)     # name -> atomic BasedSpace
    maps: dict = dc_field(default_factory=dict)       # name -> LinMap
    bundles: dict = dc_field(default_factory=dict)    # name -> Bundle
    _resolved: dict = dc_field(default_factory=dict, repr=False)

    def __getitem__(self, name: str):
        return self.get(name)

    def names(self, kind: str | None = None) -> list:
        return [n for n, b in self.bundles.items() if kind is None or b.kind == kind]

    def kind(self, name: str) -> str:
        if name not in self.bundles:
            raise UnresolvedName(name, what="bundle")
        return self.bundles[name].kind

    def get(self, name: str):
        """The resolved object for a bundle name."""
        if name not in self._resolved:
            if name not in self.bundles:
                raise UnresolvedName(name, what="bundle")
            self._resolved[name] = _resolve(self, self.bundles[name])
        return self._resolved[name]

    def resolve_all(self):
        for n in self.bundles:
            self.get(n)
        return self

    def to_text(self) -> str:
        return serialize(self)

    # -- building from objects ------------------------------------------

    @classmethod
    def from_objects(cls, field: Field, items) -> "StructureFile":
        """Structure file holding ``items`` (pairs of bundle name and object).

        Objects reachable from an item (its H, the A and B of a double
        input, the ends of a morphism) are added first under derived names
        unless they already appear.
        """
        sf = cls(field)
        _Writer(sf).add_all(items)
        return sf


# ---------------------------------------------------------------------------
# parsing


def _strip_comment(line: str) -> str:
    # names may contain '#', so a comment must start at a token boundary
    m = re.search(r"(^|\s)#", line)
    return line if m is None else line[:m.start()]


def _space_expr(sf: StructureFile, expr: str, line: int, col: int) -> BasedSpace:
    if expr == "k":
        return K
    atoms = []
    for i, part in enumerate(expr.split("*")):
        if part == "k":
            continue
        if part not in sf.spaces:
            c = col + len("*".join(expr.split("*")[:i])) + (1 if i else 0)
            raise UnresolvedName(part, line, c, "space")
        atoms.append(sf.spaces[part])
    return tensor_spaces(atoms)


def _scalar(field: Field, text: str, line: int, col: int):
    if not _SCALAR.match(text):
        raise MalformedScalar(f"malformed scalar {text!r}", line, col)
    try:
        return field(text)
    except (FieldError, ValueError, ZeroDivisionError) as e:
        raise MalformedScalar(f"scalar {text!r}: {e}", line, col) from None


def parse_structure_file(text: str, field: Field | None = None) -> StructureFile:
    """Parse and fully resolve a structure file.

    ``field`` overrides a file declared over Q (entries are reduced; a
    denominator divisible by p is an error).
    """
    lines = text.splitlines()
    sf = None
    cur = None          # (name, domain, codomain, matrix, line)
    for ln, raw in enumerate(lines, 1):
        toks = [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", _strip_comment(raw))]
        if not toks:
            continue
        head, hcol = toks[0]
        if cur is not None:
            if head == "end":
                name, dom, cod, mat, mline = cur
                sf.maps[name] = LinMap(sf.field, dom, cod, mat)
                cur = None
                continue
            if len(toks) != 3:
                raise FormatSyntaxError("expected 'row col value' or 'end'", ln, hcol)
            (r, rc), (c, cc), (v, vc) = toks
            _, dom, cod, mat, _ = cur
            if r not in cod.labels:
                raise ShapeMismatchError(f"row label {r!r} is not a basis label of {cod}", ln, rc)
            if c not in dom.labels:
                raise ShapeMismatchError(f"column label {c!r} is not a basis label of {dom}", ln, cc)
            mat[cod.index(r), dom.index(c)] = _scalar(sf.field, v, ln, vc)
            continue
        if sf is None:
            if head != "field":
                raise FormatSyntaxError("file must start with a 'field' line", ln, hcol)
            sf = StructureFile(_parse_field(toks, ln, field))
            continue
        if head == "field":
            raise FormatSyntaxError("duplicate 'field' line", ln, hcol)
        if head == "space":
            if len(toks) < 3:
                raise FormatSyntaxError("expected 'space NAME LABEL...'", ln, hcol)
            name, ncol = toks[1]
            if name == "k" or not _NAME.match(name) or "*" in name:
                raise FormatSyntaxError(f"bad space name {name!r}", ln, ncol)
            if name in sf.spaces:
                raise DuplicateName(f"space {name!r} declared twice", ln, ncol)
            try:
                sf.spaces[name] = BasedSpace(name, tuple(t for t, _ in toks[2:]))
            except ValueError as e:
                raise FormatSyntaxError(str(e), ln, toks[2][1]) from None
            continue
        if head == "map":
            if len(toks) != 6 or toks[2][0] != ":" or toks[4][0] != "->":
                raise FormatSyntaxError("expected 'map NAME : DOMAIN -> CODOMAIN'", ln, hcol)
            name, ncol = toks[1]
            if name in sf.maps or name in sf.bundles:
                raise DuplicateName(f"name {name!r} declared twice", ln, ncol)
            dom = _space_expr(sf, toks[3][0], ln, toks[3][1])
            cod = _space_expr(sf, toks[5][0], ln, toks[5][1])
            cur = (name, dom, cod, sf.field.zeros((cod.dim, dom.dim)), ln)
            continue
        if head in _REQUIRED:
            _parse_bundle(sf, head, toks, ln)
            continue
        raise FormatSyntaxError(f"unknown directive {head!r}", ln, hcol)
    if sf is None:
        raise FormatSyntaxError("empty structure file", 1, 1)
    if cur is not None:
        raise FormatSyntaxError(f"map {cur[0]!r} is missing 'end'", cur[4], 1)
    return sf.resolve_all()


def _parse_field(toks, ln, override):
    kind, kcol = toks[1] if len(toks) > 1 else ("", toks[0][1])
    if kind == "Q" and len(toks) == 2:
        declared = Field(0)
    elif kind == "Fp" and len(toks) == 3:
        p, pcol = toks[2]
        if not re.match(r"^\d+$", p):
            raise NonPrimeField(f"characteristic {p!r} is not an integer", ln, pcol)
        try:
            declared = Field(int(p))
        except (FieldError, ValueError) as e:
            raise NonPrimeField(str(e), ln, pcol) from None
    else:
        raise FormatSyntaxError("expected 'field Q' or 'field Fp P'", ln, kcol)
    if override is None or override == declared:
        return declared
    if declared.p != 0:
        raise FormatSyntaxError(f"cannot override a file declared over {declared.name}", ln, kcol)
    return override


def _parse_bundle(sf, kind, toks, ln):
    if len(toks) < 2:
        raise FormatSyntaxError(f"expected '{kind} NAME key=value...'", ln, toks[0][1])
    name, ncol = toks[1]
    if not _NAME.match(name):
        raise FormatSyntaxError(f"bad bundle name {name!r}", ln, ncol)
    if name in sf.bundles or name in sf.maps:
        raise DuplicateName(f"name {name!r} declared twice", ln, ncol)
    args, cols = {}, {}
    allowed = BUNDLE_KEYS[kind]
    for t, c in toks[2:]:
        if "=" not in t:
            raise FormatSyntaxError(f"expected key=value, got {t!r}", ln, c)
        k, v = t.split("=", 1)
        if k not in allowed:
            raise FormatSyntaxError(f"unknown key {k!r} for {kind}", ln, c)
        if k in args:
            raise DuplicateName(f"key {k!r} given twice", ln, c)
        args[k], cols[k] = v, c + len(k) + 1
    for k in _REQUIRED[kind]:
        if k not in args:
            raise FormatSyntaxError(f"{kind} {name!r} lacks required key {k!r}", ln, ncol)
    sf.bundles[name] = Bundle(kind, name, args, ln, cols)


# ---------------------------------------------------------------------------
# resolution


def _resolve(sf: StructureFile, b: Bundle):
    from .biproduct import LRAdmissibleCandidate
    from .double import DoubleBiproductInput
    from .lr import LRMorphism, LRObject, YdObject

    def ref_map(key, dom=None, cod=None):
        name = b.args[key]
        if name not in sf.maps:
            raise UnresolvedName(name, b.line, b.cols[key], "map")
        f = sf.maps[name]
        if (dom is not None and f.domain != dom) or (cod is not None and f.codomain != cod):
            raise ShapeMismatchError(
                f"map {name!r} is {f.domain} -> {f.codomain}, "
                f"{key} needs {dom if dom is not None else '?'} -> {cod if cod is not None else '?'}",
                b.line, b.cols[key])
        return f

    def ref_bundle(key, kinds):
        name = b.args[key]
        if name not in sf.bundles:
            raise UnresolvedName(name, b.line, b.cols[key], "bundle")
        if sf.bundles[name].kind not in kinds:
            raise ShapeMismatchError(f"{key}={name!r} must be a {' or '.join(kinds)}",
                                     b.line, b.cols[key])
        return sf.get(name)

    def alg_coalg(A=None):
        mult = ref_map("mult")
        A = A or mult.codomain
        mult = ref_map("mult", A * A, A)
        unit = ref_map("unit", K, A)
        comult = ref_map("comult", A, A * A)
        counit = ref_map("counit", A, K)
        return AlgebraData(A, mult, unit), CoalgebraData(A, comult, counit)

    def structures(H, D):
        Hs = H.carrier
        ta, tc = trivial_actions(H, D), trivial_coactions(H, D)
        get = lambda k, dom, cod, dflt: ref_map(k, dom, cod) if k in b.args else dflt
        acts = ActionPair(get("left-action", Hs * D, D, ta.left), get("right-action", D * Hs, D, ta.right))
        cos = CoactionPair(get("left-coaction", D, Hs * D, tc.left), get("right-coaction", D, D * Hs, tc.right))
        return acts, cos

    if b.kind == "bialgebra":
        alg, coalg = alg_coalg()
        return BialgebraData(alg, coalg)
    if b.kind == "candidate":
        H = ref_bundle("H", ["bialgebra"])
        alg, coalg = alg_coalg()
        acts, cos = structures(H, alg.carrier)
        return LRAdmissibleCandidate(H, alg, coalg, acts, cos, b.name)
    if b.kind == "lr-object":
        H = ref_bundle("H", ["bialgebra"])
        D = _space_expr(sf, b.args["carrier"], b.line, b.cols["carrier"])
        acts, cos = structures(H, D)
        return LRObject(H, D, acts, cos, b.name)
    if b.kind == "yd":
        H = ref_bundle("H", ["bialgebra"])
        side = b.args["side"]
        if side not in ("left", "right"):
            raise FormatSyntaxError(f"side must be left or right, not {side!r}", b.line, b.cols["side"])
        act = ref_map("action")
        D = act.codomain
        Hs = H.carrier
        if side == "left":
            act = ref_map("action", Hs * D, D)
            co = ref_map("coaction", D, Hs * D)
        else:
            act = ref_map("action", D * Hs, D)
            co = ref_map("coaction", D, D * Hs)
        alg = coalg = None
        if "mult" in b.args:
            missing = [k for k in ("unit", "comult", "counit") if k not in b.args]
            if missing:
                raise FormatSyntaxError(f"yd {b.name!r} lacks {missing[0]!r}", b.line, 1)
            alg, coalg = alg_coalg(D)
        return YdObject(H, D, act, co, side, alg, coalg, b.name)
    if b.kind == "double-biproduct-input":
        H = ref_bundle("H", ["bialgebra"])
        A = ref_bundle("A", ["yd"])
        B = ref_bundle("B", ["yd"])
        try:
            return DoubleBiproductInput(H, A, B, b.name)
        except ValueError as e:
            raise ShapeMismatchError(str(e), b.line, b.cols["A"]) from None
    if b.kind == "morphism":
        src = ref_bundle("source", ["lr-object"])
        tgt = ref_bundle("target", ["lr-object"])
        f = ref_map("map", src.carrier, tgt.carrier)
        return LRMorphism(f, src, tgt, b.name)
    raise FormatSyntaxError(f"unknown bundle kind {b.kind!r}", b.line, 1)


def load(path, field: Field | None = None) -> StructureFile:
    with open(path, encoding="utf-8") as fh:
        return parse_structure_file(fh.read(), field)


# ---------------------------------------------------------------------------
# serialization


def serialize(sf: StructureFile) -> str:
    f = sf.field
    out = [f"field {f.name}" if f.p == 0 else f"field Fp {f.p}"]
    for s in sf.spaces.values():
        out.append(f"space {s.name} {' '.join(s.labels)}")
    for name, m in sf.maps.items():
        out.append(f"map {name} : {_expr(m.domain)} -> {_expr(m.codomain)}")
        mat = m.matrix
        for i, r in enumerate(m.codomain.labels):
            for j, c in enumerate(m.domain.labels):
                if mat[i, j] != 0:
                    out.append(f"{r} {c} {f.format(mat[i, j])}")
        out.append("end")
    for b in sf.bundles.values():
        args = " ".join(f"{k}={v}" for k, v in b.args.items())
        out.append(f"{b.kind} {b.name} {args}".rstrip())
    return "\n".join(out) + "\n"


def _expr(s: BasedSpace) -> str:
    return "k" if s.is_unit else "*".join(a.name for a in s.atoms)


class _Writer:
    def __init__(self, sf: StructureFile):
        self.sf = sf
        self.names = {}      # id(obj) -> bundle name
        self.keep = []       # hold references so ids stay unique

    def add_all(self, items):
        for name, obj in items:
            self.add(name, obj)

    def space(self, s: BasedSpace):
        for a in s.atoms:
            old = self.sf.spaces.get(a.name)
            if old is None:
                self.sf.spaces[a.name] = a
            elif old != a:
                raise ValueError(f"two different spaces are named {a.name!r}")

    def map(self, name: str, m: LinMap) -> str:
        self.space(m.domain)
        self.space(m.codomain)
        if name in self.sf.maps:
            if self.sf.maps[name] is m:
                return name
            raise ValueError(f"map name {name!r} used twice")
        self.sf.maps[name] = m.to_field(self.sf.field) if m.field != self.sf.field else m
        return name

    def bundle(self, kind, name, args, obj):
        if name in self.sf.bundles:
            raise ValueError(f"bundle name {name!r} used twice")
        self.sf.bundles[name] = Bundle(kind, name, args)
        self.names[id(obj)] = name
        self.keep.append(obj)
        return name

    def ref(self, obj, default_name):
        if id(obj) in self.names:
            return self.names[id(obj)]
        return self.add(default_name, obj)

    def _alg_args(self, name, alg, coalg):
        return {
            "mult": self.map(f"{name}.mult", alg.mult),
            "unit": self.map(f"{name}.unit", alg.unit),
            "comult": self.map(f"{name}.comult", coalg.comult),
            "counit": self.map(f"{name}.counit", coalg.counit),
        }

    def _struct_args(self, name, acts, cos):
        return {
            "left-action": self.map(f"{name}.left-action", acts.left),
            "right-action": self.map(f"{name}.right-action", acts.right),
            "left-coaction": self.map(f"{name}.left-coaction", cos.left),
            "right-coaction": self.map(f"{name}.right-coaction", cos.right),
        }

    def add(self, name: str, obj) -> str:
        from .biproduct import LRAdmissibleCandidate
        from .double import DoubleBiproductInput
        from .lr import LRMorphism, LRObject, YdObject

        if id(obj) in self.names:
            return self.names[id(obj)]
        if isinstance(obj, BialgebraData):
            return self.bundle("bialgebra", name, self._alg_args(name, obj.algebra, obj.coalgebra), obj)
        if isinstance(obj, LRAdmissibleCandidate):
            H = self.ref(obj.H, f"{name}.H")
            args = {"H": H, **self._alg_args(name, obj.algebra, obj.coalgebra),
                    **self._struct_args(name, obj.actions, obj.coactions)}
            return self.bundle("candidate", name, args, obj)
        if isinstance(obj, LRObject):
            H = self.ref(obj.H, f"{name}.H")
            self.space(obj.carrier)
            args = {"H": H, "carrier": _expr(obj.carrier),
                    **self._struct_args(name, obj.actions, obj.coactions)}
            return self.bundle("lr-object", name, args, obj)
        if isinstance(obj, YdObject):
            H = self.ref(obj.H, f"{name}.H")
            args = {"H": H, "side": obj.side,
                    "action": self.map(f"{name}.action", obj.action),
                    "coaction": self.map(f"{name}.coaction", obj.coaction)}
            if obj.algebra is not None:
                args.update(self._alg_args(name, obj.algebra, obj.coalgebra))
            return self.bundle("yd", name, args, obj)
        if isinstance(obj, DoubleBiproductInput):
            H = self.ref(obj.H, f"{name}.H")
            A = self.ref(obj.A, f"{name}.A")
            B = self.ref(obj.B, f"{name}.B")
            return self.bundle("double-biproduct-input", name, {"H": H, "A": A, "B": B}, obj)
        if isinstance(obj, LRMorphism):
            src = self.ref(obj.source, f"{name}.source")
            tgt = self.ref(obj.target, f"{name}.target")
            args = {"map": self.map(f"{name}.map", obj.f), "source": src, "target": tgt}
            return self.bundle("morphism", name, args, obj)
        raise TypeError(f"cannot serialize {type(obj).__name__}")
