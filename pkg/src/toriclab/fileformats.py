"""Line-oriented text formats for fans, pairs and polytopes.

The formats are deliberately flat and hand-writable:

    fan file:       dim <n>            pair file:   fan <path>   (or an
                    ray <c1> ... <cn>               inline dim/ray/cone
                    cone <i> <j> ...                block), then
                                                    coeff <ray-index> <p>/<q>
    polytope file:  dim <n>
                    vertex <c1> ... <cn>

'#' starts a comment, blank lines are ignored, and cone/coeff indices refer
to the ray lines in file order.  Emitters write the canonical ray order, so
emit(parse(file)) is byte-identical exactly on canonical-form files.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Optional

from toriclab.fan import Fan, validate_fan
from toriclab.pairs import ToricPair, validate_pair
from toriclab.polytope import Polytope


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _logical_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_fan(text: str, validate: bool = True) -> Fan:
    """Parse a fan file.  With validate=True (the default) the fan axioms
    are checked too and a violation is a semantic ParseError; pass
    validate=False to obtain the raw fan and run diagnostics yourself."""
    dim: Optional[int] = None
    rays: list[tuple[int, ...]] = []
    cones: list[tuple[int, ...]] = []
    ray_lines: dict[tuple[int, ...], int] = {}
    for lineno, words in _logical_lines(text):
        key, args = words[0], words[1:]
        if key == "dim":
            if dim is not None:
                raise ParseError(lineno, "duplicate dim line")
            if len(args) != 1 or not args[0].isdigit():
                raise ParseError(lineno, "expected: dim <n>")
            dim = int(args[0])
        elif key == "ray":
            if dim is None:
                raise ParseError(lineno, "ray before dim")
            try:
                ray = tuple(int(x) for x in args)
            except ValueError:
                raise ParseError(lineno, "ray coordinates must be integers") from None
            if len(ray) != dim:
                raise ParseError(lineno, f"expected {dim} coordinates")
            if ray in ray_lines:
                raise ParseError(lineno, f"duplicate ray (first seen on line {ray_lines[ray]})")
            ray_lines[ray] = lineno
            rays.append(ray)
        elif key == "cone":
            if dim is None:
                raise ParseError(lineno, "cone before dim")
            try:
                cone = tuple(int(x) for x in args)
            except ValueError:
                raise ParseError(lineno, "cone entries must be ray indices") from None
            if not cone:
                raise ParseError(lineno, "empty cone")
            for i in cone:
                if i < 0 or i >= len(rays):
                    raise ParseError(lineno, f"ray index {i} out of range")
            cones.append(cone)
        else:
            raise ParseError(lineno, f"unknown directive {key!r}")
    if dim is None:
        raise ParseError(1, "missing dim line")
    try:
        fan = Fan.from_data(rays, cones, rank=dim)
    except ValueError as e:
        raise ParseError(1, str(e)) from None
    if validate:
        diag = validate_fan(fan)
        if not diag.valid:
            raise ParseError(1, f"invalid fan: {diag.problem} (witness {diag.witness})")
    return fan


def parse_pair(text: str, base_dir: str = ".") -> ToricPair:
    """Parse a pair file; `fan <path>` loads the fan from a file relative
    to base_dir, or the fan block may appear inline."""
    fan_path: Optional[str] = None
    inline: list[str] = []
    coeff_lines: list[tuple[int, int, Fraction]] = []
    for lineno, words in _logical_lines(text):
        key, args = words[0], words[1:]
        if key == "fan":
            if len(args) != 1:
                raise ParseError(lineno, "expected: fan <path>")
            fan_path = args[0]
        elif key in ("dim", "ray", "cone"):
            inline.append(" ".join(words))
        elif key == "coeff":
            if len(args) != 2:
                raise ParseError(lineno, "expected: coeff <ray-index> <p>/<q>")
            try:
                idx = int(args[0])
                value = Fraction(args[1])
            except (ValueError, ZeroDivisionError):
                raise ParseError(lineno, "bad coefficient") from None
            coeff_lines.append((lineno, idx, value))
        else:
            raise ParseError(lineno, f"unknown directive {key!r}")
    if fan_path is not None and inline:
        raise ParseError(1, "give the fan either by path or inline, not both")
    if fan_path is not None:
        path = os.path.join(base_dir, fan_path)
        try:
            with open(path, encoding="utf-8") as fh:
                fan_text = fh.read()
        except OSError as e:
            raise ParseError(1, f"cannot read fan file {path}: {e}") from None
    elif inline:
        fan_text = "\n".join(inline)
    else:
        raise ParseError(1, "pair file has no fan")
    fan = parse_fan(fan_text)

    # coeff indices refer to the ray order of the fan as written; map onto
    # the canonical order of the constructed fan
    from toriclab.lattice import primitive

    file_rays = [
        primitive(tuple(int(x) for x in words[1:]))
        for _, words in _logical_lines(fan_text)
        if words[0] == "ray"
    ]
    coeffs = [Fraction(0)] * len(fan.rays)
    for lineno, idx, value in coeff_lines:
        if idx < 0 or idx >= len(file_rays):
            raise ParseError(lineno, f"coeff names ray index {idx}, but only {len(file_rays)} rays exist")
        coeffs[fan.rays.index(file_rays[idx])] += value
    try:
        pair = ToricPair.from_fan(fan, coeffs)
    except ValueError as e:
        raise ParseError(1, str(e)) from None
    diag = validate_pair(pair)
    if not diag.valid:
        raise ParseError(1, f"invalid pair: {diag.problem} (witness {diag.witness})")
    return pair


def parse_polytope(text: str) -> Polytope:
    dim: Optional[int] = None
    vertices: list[tuple[int, ...]] = []
    for lineno, words in _logical_lines(text):
        key, args = words[0], words[1:]
        if key == "dim":
            if dim is not None:
                raise ParseError(lineno, "duplicate dim line")
            if len(args) != 1 or not args[0].isdigit():
                raise ParseError(lineno, "expected: dim <n>")
            dim = int(args[0])
        elif key == "vertex":
            if dim is None:
                raise ParseError(lineno, "vertex before dim")
            try:
                v = tuple(int(x) for x in args)
            except ValueError:
                raise ParseError(lineno, "vertex coordinates must be integers") from None
            if len(v) != dim:
                raise ParseError(lineno, f"expected {dim} coordinates")
            vertices.append(v)
        else:
            raise ParseError(lineno, f"unknown directive {key!r}")
    if dim is None:
        raise ParseError(1, "missing dim line")
    if not vertices:
        raise ParseError(1, "polytope file has no vertices")
    return Polytope.hull(vertices, rank=dim)


def fan_file_ray_order(text: str) -> list[tuple[int, ...]]:
    """The (primitivized) rays of a fan file in the order written; used to
    translate user-facing ray indices into canonical ones."""
    from toriclab.lattice import primitive

    return [
        primitive(tuple(int(x) for x in words[1:]))
        for _, words in _logical_lines(text)
        if words[0] == "ray"
    ]


def fan_file_cone_order(text: str) -> list[tuple[int, ...]]:
    """The cone index tuples of a fan file in the order written, already
    translated into canonical ray indices."""
    rays = fan_file_ray_order(text)
    fan = parse_fan(text, validate=False)
    out = []
    for _, words in _logical_lines(text):
        if words[0] == "cone":
            file_idx = [int(x) for x in words[1:]]
            out.append(tuple(sorted(fan.rays.index(rays[i]) for i in file_idx)))
    return out


def emit_fan(fan: Fan) -> str:
    lines = [f"dim {fan.rank}"]
    lines += ["ray " + " ".join(str(x) for x in ray) for ray in fan.rays]
    lines += ["cone " + " ".join(str(i) for i in cone) for cone in fan.max_cones]
    return "\n".join(lines) + "\n"


def emit_pair(pair: ToricPair) -> str:
    out = emit_fan(pair.fan)
    for i, b in enumerate(pair.boundary):
        if b != 0:
            out += f"coeff {i} {b}\n"
    return out


def emit_polytope(P: Polytope) -> str:
    if not P.is_lattice:
        raise ValueError("can only emit lattice polytopes")
    lines = [f"dim {P.rank}"]
    lines += ["vertex " + " ".join(str(int(x)) for x in v) for v in P.vertices]
    return "\n".join(lines) + "\n"
