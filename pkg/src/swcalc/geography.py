"""Geography of (chi_h, c): region tags, congruences, and chart emission.

Coordinates are chi_h = (e + sigma)/4 on the horizontal axis and
c = 3 sigma + 2e on the vertical. Tags are cumulative: a lattice point on a
boundary line carries the line tag and every adjacent region tag, so
consumers filter rather than branch.
"""

from __future__ import annotations

from typing import Iterator, List, Tuple

from .errors import InvalidParameters, OutOfBand, TypeOdd

__all__ = [
    "classify",
    "spin_congruence",
    "basic_class_bound",
    "chart_rows",
]


def _check_point(chi_h: int, c: int) -> None:
    if not isinstance(chi_h, int) or not isinstance(c, int):
        raise InvalidParameters(
            f"geography points are integer pairs, got ({chi_h!r}, {c!r})")
    if chi_h < 1:
        raise InvalidParameters(f"chi_h must be >= 1, got {chi_h}")


def classify(chi_h: int, c: int) -> Tuple[str, ...]:
    """All region and line tags that apply to the point (chi_h, c)."""
    _check_point(chi_h, c)
    tags: List[str] = []
    if c < 0:
        tags.append("negative-c")
    if c == 0:
        tags.append("elliptic-line")
    if chi_h == 1 and 0 <= c <= 9:
        tags.append("rational-region")
    if c == 2 * chi_h - 6:
        tags.append("noether-line")
    if 2 * chi_h - 6 <= c < 9 * chi_h:
        tags.append("general-type-wedge")
    if 8 * chi_h < c < 9 * chi_h:
        tags.append("arctic")
    if c == 9 * chi_h:
        tags.append("bmy-line")
    if c > 9 * chi_h:
        tags.append("beyond-bmy")
    if chi_h - 3 <= c <= 2 * chi_h - 6:
        tags.append("one-basic-class-band")
    if 0 <= c <= chi_h - 3:
        tags.append("many-basic-classes-band")
    if chi_h >= 2 and 0 < c < 2 * chi_h - 6:
        tags.append("no-complex-structure")
    sigma = c - 8 * chi_h
    if sigma > 0:
        tags.append("sigma-positive")
    elif sigma < 0:
        tags.append("sigma-negative")
    else:
        tags.append("sigma-zero")
    return tuple(tags)


def spin_congruence(chi_h: int, c: int, parity: int = 0) -> bool:
    """Whether (chi_h, c) satisfies the spin signature congruence
    c = 8 chi_h mod 16 (sigma divisible by 16). Only meaningful for even
    intersection forms; parity 1 raises TypeOdd."""
    _check_point(chi_h, c)
    if parity == 1:
        raise TypeOdd("spin congruence applies to even (t = 0) types only")
    if parity != 0:
        raise InvalidParameters("parity t must be 0 or 1")
    return (c - 8 * chi_h) % 16 == 0


def basic_class_bound(chi_h: int, c: int) -> int:
    """Lower bound max(chi_h - c - 2, 0) for the number of basic classes,
    valid in the bands 0 <= c <= 2 chi_h - 6 below the Noether line."""
    _check_point(chi_h, c)
    if not (0 <= c <= 2 * chi_h - 6):
        raise OutOfBand(
            f"({chi_h}, {c}) lies outside the bands 0 <= c <= 2 chi_h - 6")
    return max(chi_h - c - 2, 0)


def chart_rows(max_chi: int) -> Iterator[str]:
    """Tab-separated chart rows 'chi_h<TAB>c<TAB>tags' (tags comma-joined),
    covering chi_h = 1 .. max_chi and c = -1 .. 9 chi_h + 1, header first."""
    if max_chi < 1:
        raise InvalidParameters("chart needs max_chi >= 1")
    yield "chi_h\tc\ttags"
    for chi in range(1, max_chi + 1):
        for c in range(-1, 9 * chi + 2):
            yield f"{chi}\t{c}\t{','.join(classify(chi, c))}"
