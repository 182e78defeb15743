"""Boolean functions of three variables.

A function ``f(x, y, z)`` is stored as an 8-bit truth table whose bit
``4*x + 2*y + z`` holds ``f(x, y, z)``.  Its algebraic normal form (ANF)
is stored the same way over the monomials ``1, z, y, yz, x, xz, xy, xyz``:
bit ``4*[x] + 2*[y] + [z]`` is the coefficient of the monomial.

>>> print_poly(anf_from_tt(0xFC))
'xy+x+y'
>>> tt_from_anf(parse_poly("x+z"))
90
"""

from __future__ import annotations

__all__ = [
    "PolyParseError",
    "anf_from_tt",
    "eval_tt",
    "eval_anf",
    "parse_poly",
    "print_poly",
    "tt_from_anf",
    "tt_of",
]

# Printing order of monomials, by bit index: xyz, xy, xz, yz, x, y, z, 1.
_PRINT_ORDER = (7, 6, 5, 3, 4, 2, 1, 0)
_VAR_BIT = {"x": 4, "y": 2, "z": 1}


class PolyParseError(ValueError):
    """Raised for malformed polynomial text; ``pos`` is the offending offset."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


def eval_tt(tt: int, x: int, y: int, z: int) -> int:
    return (tt >> (4 * x + 2 * y + z)) & 1


def _moebius(mask: int) -> int:
    # The GF(2) Moebius transform is its own inverse.
    a = [(mask >> i) & 1 for i in range(8)]
    for step in (1, 2, 4):
        for i in range(8):
            if i & step:
                a[i] ^= a[i ^ step]
    return sum(bit << i for i, bit in enumerate(a))


_ANF_TABLE = tuple(_moebius(m) for m in range(256))


def anf_from_tt(tt: int) -> int:
    """Return the ANF coefficient mask of the truth table ``tt``."""
    return _ANF_TABLE[tt & 0xFF]


def tt_from_anf(coeffs: int) -> int:
    """Inverse of :func:`anf_from_tt`."""
    return _ANF_TABLE[coeffs & 0xFF]


def eval_anf(coeffs: int, x: int, y: int, z: int) -> int:
    """Evaluate an ANF directly as a GF(2) sum of monomials (no truth table)."""
    point = 4 * x + 2 * y + z
    total = 0
    for m in range(8):
        # monomial m is 1 iff every variable it contains is 1
        if (coeffs >> m) & 1 and (m & point) == m:
            total ^= 1
    return total


def parse_poly(text: str) -> int:
    """Parse a ``+``-separated GF(2) polynomial in x, y, z.

    Terms are ``0``, ``1`` or juxtaposed variable letters in any order
    (``yx`` is ``xy``).  Whitespace is ignored and repeated monomials
    cancel, so ``"y+y"`` parses to zero.
    """
    if not text.strip():
        raise PolyParseError("empty input", text, 0)
    coeffs = 0
    start = 0
    for piece in text.split("+"):
        coeffs ^= _parse_term(piece, text, start)
        start += len(piece) + 1
    return coeffs


def _parse_term(piece: str, text: str, offset: int) -> int:
    body = piece.strip()
    if not body:
        raise PolyParseError("empty term", text, offset)
    if body in ("0", "1"):
        return int(body)
    mono = 0
    for i, ch in enumerate(piece):
        pos = offset + i
        if ch.isspace():
            continue
        bit = _VAR_BIT.get(ch)
        if bit is None:
            raise PolyParseError(f"unexpected character {ch!r}", text, pos)
        if mono & bit:
            raise PolyParseError(f"repeated variable {ch!r}", text, pos)
        mono |= bit
    return 1 << mono


def print_poly(coeffs: int) -> str:
    terms = []
    for m in _PRINT_ORDER:
        if (coeffs >> m) & 1:
            terms.append("".join(v for v, b in _VAR_BIT.items() if m & b) or "1")
    return "+".join(terms) or "0"


def tt_of(text: str) -> int:
    """Truth table of a polynomial given in text form."""
    return tt_from_anf(parse_poly(text))
