"""Admissibility and consistency checks run before any formula path.

Checks report, they never raise.  Each error guards a fixed set of
computation paths; warnings guard nothing.
"""
from dataclasses import dataclass, field

from .errors import MRKError
from .index import compute_p1, dim_asd, dim_dirac
from .lattice import congruent_mod2, is_characteristic, pair, square
from .manifold import derive_F, flat_connection_obstructed

LINK_PATHS = frozenset({"pair", "reduction", "simple-type"})
FORMULA_PATHS = LINK_PATHS | {"reducibles"}
ALL_PATHS = FORMULA_PATHS | {"km", "witten"}

# code -> (severity, guarded paths, description)
CHECKS = {
    "admissibility-parity": ("error", FORMULA_PATHS, "b+ - b1 must be odd"),
    "lattice-rank": ("error", ALL_PATHS, "lattice rank must not exceed b2 = e - 2 + 2 b1"),
    "spinc-not-characteristic": ("error", FORMULA_PATHS, "c1(W+) must be characteristic"),
    "basic-class-not-characteristic": ("error", ALL_PATHS, "every basic class must be characteristic"),
    "basic-class-mod2": ("error", FORMULA_PATHS, "every basic class must be congruent to c1(W+) mod 2"),
    "index-nonintegral": ("error", LINK_PATHS, "d_a and n_a must be integers"),
    "d_a-negative": ("error", LINK_PATHS, "d_a >= 0 is needed for a Donaldson invariant"),
    "n_a-nonpositive": ("error", LINK_PATHS, "n_a > 0 is needed for the cobordism"),
    "b1-too-large": ("error", LINK_PATHS, "the link pairing formula needs b1 <= 1"),
    "flat-connection-uncertified": ("warning", frozenset(), "no flat SO(3) connection could not be certified"),
    "F-square-parity": ("warning", frozenset(), "F^2 must be even when K.F = 0 (K characteristic forces K.F = F^2 mod 2)"),
    "betti-consistency": ("warning", frozenset(), "e + sigma should equal 2(1 - b1 + b+)"),
    "sublattice-mode": ("warning", frozenset(), "lattice models a proper sublattice of H^2"),
}


@dataclass(frozen=True)
class Finding:
    severity: str
    code: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple = field(default_factory=tuple)

    @property
    def passed(self):
        return not self.errors()

    def errors(self):
        return [f for f in self.findings if f.severity == "error"]

    def blocking(self, path):
        return [f for f in self.errors() if path in CHECKS[f.code][1]]


def _finding(code, message):
    return Finding(CHECKS[code][0], code, message)


def validate_setup(m, g, sw_data, simply_connected=None):
    if simply_connected is None:
        simply_connected = m.simply_connected
    out = []

    if not m.admissible():
        out.append(_finding("admissibility-parity", f"b+ - b1 = {m.bplus - m.b1} is even"))
    if m.euler + m.signature != 2 * (1 - m.b1 + m.bplus):
        out.append(_finding(
            "betti-consistency",
            f"e + sigma = {m.euler + m.signature}, 2(1 - b1 + b+) = {2 * (1 - m.b1 + m.bplus)}",
        ))
    if m.lattice.rank > m.b2:
        out.append(_finding("lattice-rank", f"rank {m.lattice.rank} > b2 = {m.b2}"))
    elif m.sublattice_mode:
        out.append(_finding("sublattice-mode", f"rank {m.lattice.rank} < b2 = {m.b2}"))

    if g is not None:
        if not is_characteristic(g.c1W):
            out.append(_finding("spinc-not-characteristic", f"c1(W+) = {list(g.c1W.coords)}"))
        if not flat_connection_obstructed(m, g.c1E, simply_connected):
            out.append(_finding(
                "flat-connection-uncertified",
                "criterion only decided for simply connected X with c1(E) odd mod 2",
            ))
        try:
            p1 = compute_p1(g)
            d_a = dim_asd(m, p1)
            n_a = dim_dirac(m, g)
        except MRKError as exc:
            out.append(_finding("index-nonintegral", str(exc)))
        else:
            if d_a < 0:
                out.append(_finding("d_a-negative", f"d_a = {d_a}"))
            if n_a <= 0:
                out.append(_finding("n_a-nonpositive", f"n_a = {n_a}"))

    if m.b1 > 1:
        out.append(_finding("b1-too-large", f"b1 = {m.b1}"))

    not_char = [d for d in sw_data if not is_characteristic(d.K)]
    if not_char:
        out.append(_finding(
            "basic-class-not-characteristic",
            "; ".join(str(list(d.K.coords)) for d in not_char),
        ))
    if g is not None:
        incongruent = [d for d in sw_data if not congruent_mod2(d.K, g.c1W)]
        if incongruent:
            out.append(_finding(
                "basic-class-mod2",
                "; ".join(str(list(d.K.coords)) for d in incongruent),
            ))
        F = derive_F(g)
        if square(F) % 2 and any(pair(d.K, F) == 0 for d in sw_data):
            out.append(_finding("F-square-parity", f"F^2 = {square(F)} is odd although K.F = 0"))

    out.sort(key=lambda f: (f.severity, f.code))
    return ValidationReport(tuple(out))
