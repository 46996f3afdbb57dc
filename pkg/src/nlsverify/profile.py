"""Construction of all problem-specific polynomial objects from the
coefficient tables.

The tables pin down a degree-50 approximate profile, two approximate
fundamental systems for the linearized equation (a regular-singular "left"
system on [-1, 0] and an irregular-singular "right" system on [0, 1] whose
oscillatory factors are split off), and several helper approximations used
by the sign-change estimates.  Everything downstream -- residual, Wronskian
determinants, adjugate blocks, parameter matrix, functional polynomials --
is assembled here exactly, with every construction-time degree bound and
divisibility claim asserted (a failed assertion is a verification failure,
not an internal error).

Variable conventions: y is the compactified space variable, a the parameter
offset, alpha = a_star + a.  Bivariate polynomials store y as the first and
a as the second variable.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import cached_property

from gmpy2 import mpq

from .exact import GaussianRational, parse_fraction, format_fraction
from .matpoly import Mat4, adj4, det4, invert_const4
from .poly import (
    ChebPoly1,
    DegreeError,
    MonoPoly1,
    MonoPoly2,
    PolyFraction,
)

I = GaussianRational(0, 1)

A_STAR = mpq(772201763088846, 841768781900003)
A_HALF_WIDTH = mpq(1, 10**10)
J_STAR = (-A_HALF_WIDTH, A_HALF_WIDTH)
A_MINUS = -A_HALF_WIDTH
A_PLUS = A_HALF_WIDTH


# ---------------------------------------------------------------------------
# table ingestion
# ---------------------------------------------------------------------------

class TableError(Exception):
    """Base class for data ingestion failures."""


class TableMissingError(TableError):
    pass


class TableFormatError(TableError):
    pass


class TableCountError(TableError):
    pass


#: name -> (row count, has imaginary column)
TABLE_SPECS = {
    "Pstar": (51, True),
    "PL1": (17, True), "PL2": (17, True), "PL3": (17, True), "PL4": (17, True),
    "PR1": (31, True), "PR2": (31, True), "PR3": (31, True), "PR4": (31, True),
    "QR3": (27, True), "QR4": (27, True),
    "phitw": (41, False),
    "Pshm": (41, False), "Pshp": (41, False),
    "Qshm": (41, False), "Qshp": (41, False),
    "Pflm": (41, False), "Pflp": (41, False),
    "Qflm": (41, False), "Qflp": (41, False),
    "PLm": (51, False), "PLp": (51, False),
}


def default_data_dir() -> str:
    env = os.environ.get("NLSVERIFY_DATA")
    if env:
        return env
    return os.path.join(os.path.dirname(__file__), "data")


def load_table(data_dir: str, name: str):
    """One coefficient table, bit-exact, as a list of scalars indexed by n."""
    count, is_complex = TABLE_SPECS[name]
    path = os.path.join(data_dir, f"{name}.dat")
    if not os.path.exists(path):
        raise TableMissingError(f"missing table file: {path}")
    rows = {}
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            expected = 3 if is_complex else 2
            if len(parts) != expected:
                raise TableFormatError(f"{name}.dat:{lineno}: expected {expected} columns")
            if not re.fullmatch(r"\d+", parts[0]):
                raise TableFormatError(f"{name}.dat:{lineno}: bad index {parts[0]!r}")
            n = int(parts[0])
            if n in rows:
                raise TableFormatError(f"{name}.dat:{lineno}: duplicated index {n}")
            try:
                if is_complex:
                    rows[n] = GaussianRational(parse_fraction(parts[1]), parse_fraction(parts[2]))
                else:
                    rows[n] = parse_fraction(parts[1])
            except ValueError as e:
                raise TableFormatError(f"{name}.dat:{lineno}: {e}") from None
    if len(rows) != count or set(rows) != set(range(count)):
        raise TableCountError(
            f"{name}.dat: expected indices 0..{count - 1}, got {len(rows)} rows")
    return [rows[n] for n in range(count)]


def serialize_table(name: str, values) -> str:
    """Inverse of load_table, used for round-trip checks and debugging."""
    _, is_complex = TABLE_SPECS[name]
    lines = [f"# {name}: {len(values)} coefficients"]
    for n, v in enumerate(values):
        if is_complex:
            lines.append(f"{n} {format_fraction(v.re)} {format_fraction(v.im)}")
        else:
            lines.append(f"{n} {format_fraction(v)}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Tables:
    """All raw coefficient tables, as Chebyshev polynomials on their domains."""

    P_star: ChebPoly1          # degree 50 on [-1, 1]
    P_L: dict                  # j in 1..4, degree 16 on [-1, 0]
    P_R: dict                  # j in 1..4, degree 30 on [0, 1]
    Q_R: dict                  # j in 3..4, degree 26 on [0, 1]
    phase: ChebPoly1           # degree 40 on [0, 9/10]
    sharp_cos: dict            # sign -> degree 40 on [-161, -10], 1e-10 scale
    sharp_sin: dict
    flat_cos: dict             # sign -> degree 40 on [0, 7/10], 1e-8 scale
    flat_sin: dict
    left_psi: dict             # sign -> degree 50 on [-1, 0], 1e-10 scale

    raw: dict                  # table name -> coefficient list (bit-exact)


def load_tables(data_dir: str | None = None) -> Tables:
    data_dir = data_dir or default_data_dir()
    raw = {name: load_table(data_dir, name) for name in TABLE_SPECS}
    scale10 = mpq(1, 10**10)
    scale8 = mpq(1, 10**8)
    return Tables(
        P_star=ChebPoly1(raw["Pstar"], (-1, 1)),
        P_L={j: ChebPoly1(raw[f"PL{j}"], (-1, 0)) for j in (1, 2, 3, 4)},
        P_R={j: ChebPoly1(raw[f"PR{j}"], (0, 1)) for j in (1, 2, 3, 4)},
        Q_R={j: ChebPoly1(raw[f"QR{j}"], (0, 1)) for j in (3, 4)},
        phase=ChebPoly1(raw["phitw"], (0, mpq(9, 10))),
        sharp_cos={s: ChebPoly1([c * scale10 for c in raw["Psh" + s]], (-161, -10)) for s in ("m", "p")},
        sharp_sin={s: ChebPoly1([c * scale10 for c in raw["Qsh" + s]], (-161, -10)) for s in ("m", "p")},
        flat_cos={s: ChebPoly1([c * scale8 for c in raw["Pfl" + s]], (0, mpq(7, 10))) for s in ("m", "p")},
        flat_sin={s: ChebPoly1([c * scale8 for c in raw["Qfl" + s]], (0, mpq(7, 10))) for s in ("m", "p")},
        left_psi={s: ChebPoly1([c * scale10 for c in raw["PL" + s]], (-1, 0)) for s in ("m", "p")},
        raw=raw,
    )


# ---------------------------------------------------------------------------
# small helpers
# ---------------------------------------------------------------------------

def div_one_minus_y(p, k: int = 1):
    """Exact quotient p / (1-y)^k (sign-corrected division by (y-1)^k)."""
    q = p.divide_linear1(1, k) if isinstance(p, MonoPoly2) else p.divide_linear(1, k)
    return q if k % 2 == 0 else -q


def div_one_plus_y(p, k: int = 1):
    """Exact quotient p / (1+y)^k."""
    return p.divide_linear1(-1, k) if isinstance(p, MonoPoly2) else p.divide_linear(-1, k)


def _y() -> MonoPoly2:
    return MonoPoly2.y()


def c_mat(entries) -> Mat4:
    return Mat4(entries)


class ConstructionError(AssertionError):
    """A structural identity assumed by a construction failed to hold."""


# ---------------------------------------------------------------------------
# the profile
# ---------------------------------------------------------------------------

class Profile:
    """Lazy container for every constructed object of the pipeline.

    All members are built exactly once (cached) from the tables; they are
    immutable afterwards and safe to share across verification tasks.
    """

    def __init__(self, tables: Tables):
        self.tables = tables
        self.a_star = A_STAR
        self.J = J_STAR
        self.a_minus = A_MINUS
        self.a_plus = A_PLUS
        self.degree_audit: list = []

    def _audit(self, name: str, obj, bound):
        if isinstance(obj, MonoPoly2):
            got = (obj.deg1, obj.deg2)
            ok = got[0] <= bound[0] and got[1] <= bound[1]
        else:
            got = obj.degree
            ok = got <= bound
        self.degree_audit.append((name, got, bound, ok))
        if not ok:
            raise DegreeError(f"{name}: degree {got} exceeds asserted bound {bound}")
        return obj

    # -- scalars and f_* -------------------------------------------------

    @cached_property
    def alpha(self) -> MonoPoly2:
        """alpha = a_star + a as a bivariate polynomial (constant in y)."""
        return MonoPoly2([[A_STAR, 1]])

    @cached_property
    def alpha_a(self) -> MonoPoly1:
        """alpha as a univariate polynomial in a."""
        return MonoPoly1([A_STAR, 1])

    def alpha_at(self, a) -> mpq:
        return A_STAR + mpq(a)

    @cached_property
    def P_star_mono(self) -> MonoPoly1:
        return self.tables.P_star.to_mono()

    @cached_property
    def P_star_at_1(self) -> GaussianRational:
        return self.P_star_mono(mpq(1))

    @cached_property
    def dP_star_at_1(self) -> GaussianRational:
        return self.P_star_mono.derivative()(mpq(1))

    @cached_property
    def P_tilde(self) -> MonoPoly1:
        """P_* - P_*(1); the a-independent part of f_* up to the constant."""
        return self.P_star_mono - MonoPoly1([self.P_star_at_1])

    def f_star_at(self, y, a) -> GaussianRational:
        """Exact value of the approximate solution f_*(y, a)."""
        al = self.alpha_at(a)
        s = (2 * I * al) / (1 - I * al)
        return self.P_tilde(mpq(y)) + s * self.dP_star_at_1

    def g_star_origin(self) -> GaussianRational:
        """g arising from the approximate profile at spatial origin, a = 0."""
        return self.f_star_at(-1, 0)

    @cached_property
    def f1c(self) -> MonoPoly2:
        """(1 - i alpha) f_*  (cleared of the a-denominator)."""
        d = self.dP_star_at_1
        one_minus_ia = MonoPoly2([[GaussianRational(1, -A_STAR), GaussianRational(0, -1)]])
        pt = MonoPoly2.from_univar1(self.P_tilde)
        two_i_alpha = MonoPoly2([[GaussianRational(0, 2 * A_STAR), GaussianRational(0, 2)]])
        return one_minus_ia * pt + two_i_alpha * MonoPoly2.const(d)

    @cached_property
    def f2c(self) -> MonoPoly2:
        """(1 + i alpha) conj(f_*); the coefficientwise conjugate of f1c."""
        return self.f1c.conjugate()

    @cached_property
    def f_star_cleared(self) -> MonoPoly2:
        """(1 + alpha^2) f_*."""
        one_plus_ia = MonoPoly2([[GaussianRational(1, A_STAR), GaussianRational(0, 1)]])
        return one_plus_ia * self.f1c

    @cached_property
    def one_plus_alpha2(self) -> MonoPoly2:
        return self.alpha * self.alpha + MonoPoly2.const(mpq(1))

    @cached_property
    def abs_f_star_sq_cleared(self) -> MonoPoly2:
        """alpha^2 (1 + alpha^2) |f_*|^2, a real polynomial."""
        w = self.alpha * self.alpha * (self.f1c * self.f2c)
        if not w.imag_part().is_zero():
            raise ConstructionError("alpha^2 (1+alpha^2)|f_*|^2 is not real")
        return w.real_part()

    def prefactor_at(self, a) -> GaussianRational:
        """K(a) = alpha^2 (1 - i alpha)^2 (1 + i alpha)."""
        al = self.alpha_at(a)
        one = GaussianRational(1)
        return (GaussianRational(al) ** 2) * (one - I * al) ** 2 * (one + I * al)

    # -- residual ---------------------------------------------------------

    @cached_property
    def residual(self) -> MonoPoly2:
        """R(y,a) = K(a) (1+y)(1-y)^2 * (residual of f_*); degree <= (151, 6).

        Assembled from the denominator-cleared pieces; the final exact
        division by (1-y) *is* the admissibility cancellation at y = 1.
        """
        y = _y()
        al = self.alpha
        one = MonoPoly2.const(mpq(1))
        omy = one - y
        opy = one + y
        ia = MonoPoly2([[GaussianRational(0, A_STAR), GaussianRational(0, 1)]])  # i alpha
        one_minus_ia = one - ia
        one_plus_ia = one + ia
        K_over_a2 = one_minus_ia * one_minus_ia * one_plus_ia
        K = al * al * K_over_a2
        # alpha (1+y)(1-y)^3 p0  (complex polynomial)
        A_p = opy * (MonoPoly2.const(GaussianRational(0, 4)) * al * al
                     - MonoPoly2.const(GaussianRational(0, 2)) * al * al * omy
                     - (MonoPoly2.const(GaussianRational(2)) * al
                        + MonoPoly2.const(GaussianRational(0, 2))) * omy * omy) \
            + MonoPoly2.const(GaussianRational(2)) * al * omy * omy * omy
        # alpha^2 (1+y)(1-y)^3 q0
        a2_pia = al * al + ia  # alpha^2 + i alpha
        A_q = -(MonoPoly2.const(GaussianRational(2)) - MonoPoly2.const(GaussianRational(0, 2)) * al) * al * al * opy \
            - one_minus_ia * opy * omy \
            - a2_pia * opy * omy * omy \
            - a2_pia * omy * omy * omy
        pt = MonoPoly2.from_univar1(self.P_tilde)
        dpt = MonoPoly2.from_univar1(self.P_tilde.derivative())
        ddpt = MonoPoly2.from_univar1(self.P_tilde.derivative(2))
        # K (1+y)(1-y)^3 * [f'' + p0 f' + q0 f + f|f|^2/(1-y)^2]
        t_ff = K * opy * omy * omy * omy * ddpt
        t_p = (al * K_over_a2) * A_p * dpt
        t_q = A_q * (self.one_plus_alpha2 * self.f1c)
        t_cubic = opy * omy * (al * al) * (self.f1c * self.f1c) * self.f2c
        total = t_ff + t_p + t_q + t_cubic
        R = div_one_minus_y(total, 1)
        return self._audit("residual R", R, (151, 6))

    # -- left fundamental matrix ------------------------------------------

    @cached_property
    def _left_parts(self):
        t = self.tables
        PL = {j: t.P_L[j].to_mono() for j in (1, 2, 3, 4)}
        y = MonoPoly1.x()
        opy = MonoPoly1([1, 1])
        f1 = MonoPoly1([GaussianRational(1)]) + opy * PL[1]
        f2 = MonoPoly1([I]) + opy * PL[2]
        h3 = MonoPoly1([GaussianRational(1)]) + opy * opy * PL[3]
        h4 = I * (MonoPoly1([GaussianRational(1)]) + opy * opy * PL[4])
        return PL, f1, f2, h3, h4

    @cached_property
    def FL_cleared(self) -> Mat4:
        """F_L with columns 3, 4 multiplied by (1+y)^2 (entries polynomial)."""
        _, f1, f2, h3, h4 = self._left_parts
        opy = MonoPoly1([1, 1])
        cols = []
        for f in (f1, f2):
            cols.append([f.real_part(), f.imag_part(),
                         f.derivative().real_part(), f.derivative().imag_part()])
        for h in (h3, h4):
            val = opy * h                      # (1+y)^2 f = (1+y) h
            der = opy * h.derivative() - h     # (1+y)^2 f'
            cols.append([val.real_part(), val.imag_part(),
                         der.real_part(), der.imag_part()])
        return Mat4([[cols[k][j] for k in range(4)] for j in range(4)])

    @cached_property
    def P_dL(self) -> MonoPoly1:
        """(1+y)^4 det F_L(y); the left Wronskian polynomial."""
        p = det4(self.FL_cleared)
        if p.degree > 72:
            raise DegreeError(f"P_dL degree {p.degree} > 72")
        self.degree_audit.append(("P_dL", p.degree, 72, True))
        return p

    @cached_property
    def adjFL4(self) -> Mat4:
        """(1+y)^4 adj(F_L): rows 3, 4 of adj(FL_cleared) scaled by (1+y)^2."""
        adj = adj4(self.FL_cleared)
        opy2 = MonoPoly1([1, 1]) ** 2
        rows = [adj.row(0), adj.row(1),
                [e * opy2 for e in adj.row(2)], [e * opy2 for e in adj.row(3)]]
        return Mat4(rows)

    @cached_property
    def adjFL3_col34(self):
        """(1+y)^3 adj(F_L)^l_c for c in {3, 4}: the columns the functional
        needs; each division by (1+y) must be exact (degree <= 54)."""
        out = {}
        for c in (2, 3):
            col = []
            for l in range(4):
                e = div_one_plus_y(self.adjFL4[l, c], 1)
                if e.degree > 54:
                    raise DegreeError(f"(1+y)^3 adj(F_L)[{l}][{c}] degree {e.degree} > 54")
                col.append(e)
            out[c] = col
        self.degree_audit.append(("(1+y)^3 adj(F_L) cols 3,4", 54, 54, True))
        return out

    @cached_property
    def FL0(self) -> Mat4:
        """F_L(0), an exact rational matrix (the clearing factor is 1 there)."""
        return self.FL_cleared.map(lambda p: mpq(p(mpq(0))))

    @cached_property
    def FL0_inv(self) -> Mat4:
        return invert_const4(self.FL0)

    @cached_property
    def PL_matrix(self) -> Mat4:
        """P_L = (1+y)^7 F_L'(y) adj(F_L(y)), entries of degree <= 74."""
        _, f1, f2, h3, h4 = self._left_parts
        opy = MonoPoly1([1, 1])
        opy3 = opy ** 3
        cols = []
        for f in (f1, f2):
            d1 = f.derivative()
            d2 = f.derivative(2)
            cols.append([opy3 * d1.real_part(), opy3 * d1.imag_part(),
                         opy3 * d2.real_part(), opy3 * d2.imag_part()])
        for h in (h3, h4):
            w = opy * h.derivative() - h            # (1+y)^2 f'
            val = opy * w                            # (1+y)^3 f'
            der = opy * w.derivative() - 2 * w       # (1+y)^3 f''
            cols.append([val.real_part(), val.imag_part(),
                         der.real_part(), der.imag_part()])
        FLpc = Mat4([[cols[k][j] for k in range(4)] for j in range(4)])
        PL = FLpc @ self.adjFL4
        worst = max(PL[j, k].degree for j in range(4) for k in range(4))
        if worst > 74:
            raise DegreeError(f"P_L entry degree {worst} > 74")
        self.degree_audit.append(("P_L entries", worst, 74, True))
        return PL

    @cached_property
    def PL_combos(self) -> dict:
        """The four complex coefficient polynomials built from P_L."""
        P = self.PL_matrix
        return {
            "p1": P[2, 2] + P[3, 3] + I * (P[3, 2] - P[2, 3]),
            "p2": P[2, 2] - P[3, 3] + I * (P[3, 2] + P[2, 3]),
            "q1": P[2, 0] + P[3, 1] + I * (P[3, 0] - P[2, 1]),
            "q2": P[2, 0] - P[3, 1] + I * (P[3, 0] + P[2, 1]),
        }

    # -- right fundamental matrix ------------------------------------------

    @cached_property
    def _right_tables(self):
        t = self.tables
        PR = {j: t.P_R[j].to_mono() for j in (1, 2, 3, 4)}
        QR = {j: t.Q_R[j].to_mono() for j in (3, 4)}
        return PR, QR

    @cached_property
    def small_blocks(self) -> dict:
        """P_{C,j}, P_{S,j}, Q_{C,j}, Q_{S,j} (j = 3, 4); degree <= (33, 1)."""
        PR, QR = self._right_tables
        y = _y()
        one = MonoPoly2.const(mpq(1))
        omy = one - y
        al = self.alpha
        half = MonoPoly2.const(mpq(1, 2))
        out = {}
        for j in (3, 4):
            re_p = MonoPoly2.from_univar1(PR[j].real_part())
            im_p = MonoPoly2.from_univar1(PR[j].imag_part())
            re_q = MonoPoly2.from_univar1(QR[j].real_part())
            im_q = MonoPoly2.from_univar1(QR[j].imag_part())
            two_my = MonoPoly2.const(mpq(2)) - y
            out[("PC", j)] = al * omy * (two_my + omy * omy * re_p + omy ** 4 * re_q)
            out[("PS", j)] = omy * omy * (half - al * omy * im_p + al * omy ** 3 * im_q)
            out[("QC", j)] = -(omy * omy) * (half - al * omy * im_p - al * omy ** 3 * im_q)
            out[("QS", j)] = al * omy * (two_my + omy * omy * re_p - omy ** 4 * re_q)
        for key, p in out.items():
            self._audit(f"{key[0]}_{key[1]}", p, (33, 1))
        return out

    def _phi_factor_mul(self, G: MonoPoly2) -> MonoPoly2:
        """alpha (1-y)^2 phi' * G for G divisible by (1-y); exact.

        alpha (1-y)^2 phi' = -4 alpha^2/(1-y) + 2 alpha^2 + 2 (1-y).
        """
        y = _y()
        one = MonoPoly2.const(mpq(1))
        omy = one - y
        al2 = self.alpha * self.alpha
        G_over = div_one_minus_y(G, 1)
        return -4 * al2 * G_over + 2 * al2 * G + 2 * (omy * G)

    @cached_property
    def small_deriv_blocks(self) -> dict:
        """P^(1)_{X,j}, Q^(1)_{X,j}; polynomial by the vanishing of the small
        blocks at y = 1 (checked at a = 0, 1, then divided exactly)."""
        sb = self.small_blocks
        y = _y()
        omy2 = (MonoPoly2.const(mpq(1)) - y) ** 2
        al = self.alpha
        out = {}
        for j in (3, 4):
            for fam_c, fam_s in (("PC", "PS"), ("QC", "QS")):
                C = sb[(fam_c, j)]
                S = sb[(fam_s, j)]
                for a0 in (0, 1):
                    if C.subs2(mpq(a0))(mpq(1)) != 0 or S.subs2(mpq(a0))(mpq(1)) != 0:
                        raise ConstructionError(
                            f"{fam_c}_{j}/{fam_s}_{j} do not vanish at y=1, a={a0}")
                out[(fam_c + "1", j)] = self._phi_factor_mul(S) + al * omy2 * C.deriv1()
                out[(fam_s + "1", j)] = -self._phi_factor_mul(C) + al * omy2 * S.deriv1()
        for key, p in out.items():
            self._audit(f"{key[0]}_{key[1]}", p, (34, 3))
        return out

    @cached_property
    def P0(self) -> Mat4:
        """Non-oscillatory block of the right system; columns 3, 4 vanish."""
        PR, _ = self._right_tables
        y = _y()
        one = MonoPoly2.const(mpq(1))
        omy = one - y
        al = self.alpha
        al_plus_i = MonoPoly2([[GaussianRational(A_STAR, 1), GaussianRational(1)]])
        half = mpq(1, 2)
        zero = MonoPoly2([])
        cols = []
        for j, unit in ((1, GaussianRational(1)), (2, I)):
            prj = MonoPoly2.from_univar1(PR[j])
            val = MonoPoly2.const(unit) * al + MonoPoly2.const(unit * half) * (al_plus_i * omy) \
                + al * omy * omy * prj
            der = MonoPoly2.const(-unit * half) * al_plus_i \
                - 2 * (al * omy * prj) + al * omy * omy * MonoPoly2.from_univar1(PR[j].derivative())
            cols.append([val.real_part(), val.imag_part(), der.real_part(), der.imag_part()])
        cols.append([zero, zero, zero, zero])
        cols.append([zero, zero, zero, zero])
        M = Mat4([[cols[k][j] for k in range(4)] for j in range(4)])
        for j in range(4):
            for k in range(2):
                self._audit(f"P0[{j}][{k}]", M[j, k], (35, 3))
        return M

    def _osc_block(self, which: str) -> Mat4:
        """The cos ("C") or sin ("S") block of the right system."""
        sb = self.small_blocks
        sd = self.small_deriv_blocks
        y = _y()
        omy2 = (MonoPoly2.const(mpq(1)) - y) ** 2
        al = self.alpha
        s = al * omy2
        zero = MonoPoly2([])
        P, Q = ("PC", "QC") if which == "C" else ("PS", "QS")
        P1, Q1 = P + "1", Q + "1"
        rows = [
            [zero, zero, s * sb[(P, 3)], -(s * sb[(Q, 4)])],
            [zero, zero, s * sb[(Q, 3)], s * sb[(P, 4)]],
            [zero, zero, sd[(P1, 3)], -sd[(Q1, 4)]],
            [zero, zero, sd[(Q1, 3)], sd[(P1, 4)]],
        ]
        M = Mat4(rows)
        for j in range(4):
            for k in (2, 3):
                self._audit(f"P{which}[{j}][{k}]", M[j, k], (35, 3))
        return M

    @cached_property
    def PC(self) -> Mat4:
        return self._osc_block("C")

    @cached_property
    def PS(self) -> Mat4:
        return self._osc_block("S")

    @cached_property
    def P_dR(self) -> MonoPoly2:
        """det(P0 + PC); the right Wronskian polynomial, degree <= (140, 12)."""
        return self._audit("P_dR", det4(self.P0 + self.PC), (140, 12))

    @cached_property
    def Q2(self) -> MonoPoly2:
        half = mpq(1, 2)
        d1 = det4(self.P0 + self.PC + self.PS)
        d2 = det4(self.P0 + self.PC - self.PS)
        return self._audit("Q2", (d1 - d2) * half, (140, 12))

    @cached_property
    def Q3(self) -> MonoPoly2:
        return self._audit("Q3", det4(self.P0 + self.PS), (140, 12))

    @cached_property
    def _adjC(self) -> Mat4:
        return adj4(self.P0 + self.PC)

    @cached_property
    def _adjS(self) -> Mat4:
        return adj4(self.P0 + self.PS)

    @cached_property
    def QC_block(self) -> Mat4:
        """Rows 3, 4 of adj(P0+PC) (rows 1, 2 zero)."""
        zero = MonoPoly2([])
        a = self._adjC
        M = Mat4([[zero] * 4, [zero] * 4, a.row(2), a.row(3)])
        for k in range(4):
            self._audit(f"QC[2][{k}]", M[2, k], (105, 9))
            self._audit(f"QC[3][{k}]", M[3, k], (105, 9))
        return M

    @cached_property
    def QS_block(self) -> Mat4:
        zero = MonoPoly2([])
        a = self._adjS
        M = Mat4([[zero] * 4, [zero] * 4, a.row(2), a.row(3)])
        for k in range(4):
            self._audit(f"QS[2][{k}]", M[2, k], (105, 9))
        return M

    @cached_property
    def QCC_block(self) -> Mat4:
        zero = MonoPoly2([])
        a = self._adjC
        M = Mat4([a.row(0), a.row(1), [zero] * 4, [zero] * 4])
        for k in range(4):
            self._audit(f"QCC[0][{k}]", M[0, k], (105, 9))
        return M

    @cached_property
    def QSS_block(self) -> Mat4:
        zero = MonoPoly2([])
        a = self._adjS
        return Mat4([a.row(0), a.row(1), [zero] * 4, [zero] * 4])

    @cached_property
    def QCS_block(self) -> Mat4:
        zero = MonoPoly2([])
        half = mpq(1, 2)
        ap = adj4(self.P0 + self.PC + self.PS)
        am = adj4(self.P0 + self.PC - self.PS)
        rows = [
            [(ap[0, k] - am[0, k]) * half for k in range(4)],
            [(ap[1, k] - am[1, k]) * half for k in range(4)],
            [zero] * 4,
            [zero] * 4,
        ]
        M = Mat4(rows)
        for k in range(4):
            self._audit(f"QCS[0][{k}]", M[0, k], (105, 9))
        return M

    # -- parameter matrix ---------------------------------------------------

    @cached_property
    def MF_cleared(self) -> Mat4:
        """(a_star + a)^2 M_F(a) = F_L(0)^{-1} [alpha P0(0,a) + PC(0,a)];
        entries are real polynomials in a of degree <= 4."""
        al = self.alpha_a
        P0_0 = self.P0.map(lambda p: p.subs1(mpq(0)))
        PC_0 = self.PC.map(lambda p: p.subs1(mpq(0)))
        inner = Mat4([[al * P0_0[j, k] + PC_0[j, k] for k in range(4)] for j in range(4)])
        M = self.FL0_inv @ inner
        for j in range(4):
            for k in range(4):
                if M[j, k].degree > 4:
                    raise DegreeError(f"MF_cleared[{j}][{k}] degree {M[j, k].degree} > 4")
        self.degree_audit.append(("MF_cleared entries", 4, 4, True))
        return M

    @cached_property
    def det_MF_cleared(self) -> MonoPoly1:
        """det((a_star+a)^2 M_F(a)), a polynomial in a of degree <= 16."""
        d = det4(self.MF_cleared)
        if d.degree > 16:
            raise DegreeError(f"det MF_cleared degree {d.degree} > 16")
        return d

    def MF_at(self, a) -> Mat4:
        al2 = self.alpha_at(a) ** 2
        return self.MF_cleared.map(lambda p: mpq(p(mpq(a))) / al2)

    def MF_inv_at(self, a) -> Mat4:
        return invert_const4(self.MF_at(a))

    @cached_property
    def gamma_fractions(self) -> dict:
        """gamma_k(a) = (M^4_1 M^3_k - M^3_1 M^4_k)/M^3_1 as exact fractions
        in a (numerator/denominator polynomials after clearing alpha^2)."""
        M = self.MF_cleared
        den = MonoPoly1([A_STAR, 1]) ** 2 * M[2, 0]
        out = {}
        for k in (3, 4):
            num = M[3, 0] * M[2, k - 1] - M[2, 0] * M[3, k - 1]
            out[k] = PolyFraction(num, den)
        return out

    def gamma_at(self, k: int, a) -> mpq:
        g = self.gamma_fractions[k](mpq(a))
        return mpq(g)

    # -- section-8 matrices ---------------------------------------------

    @cached_property
    def PC1_matrix(self) -> Mat4:
        """alpha(1-y)^3 phi' PS + 2 alpha(1-y)^2 PC + alpha(1-y)^3 dPC."""
        return self._dcomp(self.PS, self.PC)

    @cached_property
    def PS1_matrix(self) -> Mat4:
        return self._dcomp(self.PC, self.PS, negate_phi=True)

    def _dcomp(self, A: Mat4, B: Mat4, negate_phi: bool = False) -> Mat4:
        y = _y()
        one = MonoPoly2.const(mpq(1))
        omy = one - y
        al = self.alpha
        al2 = al * al
        s1 = -4 * al2 + 2 * al2 * omy + 2 * omy * omy   # alpha (1-y)^3 phi'
        if negate_phi:
            s1 = -s1
        s2 = 2 * (al * omy * omy)
        s3 = al * omy * omy * omy
        rows = []
        for j in range(4):
            rows.append([s1 * A[j, k] + s2 * B[j, k] + s3 * B[j, k].deriv1()
                         for k in range(4)])
        M = Mat4(rows)
        name = "PS1" if negate_phi else "PC1"
        for k in (2, 3):
            for j in range(4):
                self._audit(f"{name}[{j}][{k}]", M[j, k], (37, 5))
        return M

    @cached_property
    def P0_deriv_scaled(self) -> Mat4:
        y = _y()
        omy3 = (MonoPoly2.const(mpq(1)) - y) ** 3
        s = self.alpha * omy3
        return self.P0.map(lambda p: s * p.deriv1() if p else p)

    @cached_property
    def PCC_matrix(self) -> Mat4:
        M = (self.PC1_matrix @ self.QC_block) + (self.P0_deriv_scaled @ self.QCC_block)
        self._audit("PCC[2][2]", M[2, 2], (142, 14))
        return M

    @cached_property
    def PCS_matrix(self) -> Mat4:
        M = (self.PC1_matrix @ self.QS_block) + (self.PS1_matrix @ self.QC_block) \
            + (self.P0_deriv_scaled @ self.QCS_block)
        self._audit("PCS[2][2]", M[2, 2], (142, 14))
        return M

    @cached_property
    def PSS_matrix(self) -> Mat4:
        M = (self.PS1_matrix @ self.QS_block) + (self.P0_deriv_scaled @ self.QSS_block)
        self._audit("PSS[2][2]", M[2, 2], (142, 14))
        return M

    def coeff_combo(self, M: Mat4, which: str) -> MonoPoly2:
        """The p1/p2/q1/q2 combination of a coefficient matrix (complex)."""
        half = mpq(1, 2)
        ihalf = GaussianRational(0, mpq(1, 2))
        if which == "p1":
            return -half * (M[2, 2] + M[3, 3]) - ihalf * (M[3, 2] - M[2, 3])
        if which == "p2":
            return -half * (M[2, 2] - M[3, 3]) - ihalf * (M[3, 2] + M[2, 3])
        if which == "q1":
            return -half * (M[2, 0] + M[3, 1]) - ihalf * (M[3, 0] - M[2, 1])
        if which == "q2":
            return -half * (M[2, 0] - M[3, 1]) - ihalf * (M[3, 0] + M[2, 1])
        raise ValueError(which)

    # -- functional polynomials ------------------------------------------

    def residual_slice_over_K(self, a) -> MonoPoly1:
        """(1+y)(1-y)^2 * residual(y, a) = R(y, a)/K(a), complex univariate."""
        K = self.prefactor_at(a)
        sl = self.residual.subs2(mpq(a))
        return MonoPoly1([c / K for c in sl.coeffs])

    def psi_poly(self, which: str, a) -> MonoPoly1:
        """P^psi_C or P^psi_S at pinned a; real polynomial of degree <= 256."""
        block = self.QC_block if which == "C" else self.QS_block
        rk = self.residual_slice_over_K(a)
        re_r, im_r = rk.real_part(), rk.imag_part()
        al2 = self.alpha_at(a) ** 2
        acc = MonoPoly1([])
        for k in (3, 4):
            g = self.gamma_at(k, a)
            q3 = block[k - 1, 2].subs2(mpq(a))
            q4 = block[k - 1, 3].subs2(mpq(a))
            acc = acc + g * (q3 * re_r + q4 * im_r)
        out = al2 * acc
        if out.degree > 256:
            raise DegreeError(f"P^psi_{which} degree {out.degree} > 256")
        self.degree_audit.append((f"P^psi_{which}(a={'+' if a > 0 else '-'})", out.degree, 256, True))
        return out

    def psi_poly_left(self, a) -> MonoPoly1:
        """P^psi_L at pinned a; real polynomial of degree <= 205."""
        rk = self.residual_slice_over_K(a)
        re_r, im_r = rk.real_part(), rk.imag_part()
        Minv = self.MF_inv_at(a)
        g3 = self.adjFL3_col34[2]
        g4 = self.adjFL3_col34[3]
        acc = MonoPoly1([])
        for k in (3, 4):
            gk = self.gamma_at(k, a)
            for l in range(4):
                w = gk * Minv[k - 1, l]
                if w == 0:
                    continue
                acc = acc + w * (g3[l] * re_r + g4[l] * im_r)
        if acc.degree > 205:
            raise DegreeError(f"P^psi_L degree {acc.degree} > 205")
        self.degree_audit.append((f"P^psi_L(a={'+' if a > 0 else '-'})", acc.degree, 205, True))
        return acc

    # -- phase and window approximations ----------------------------------

    @cached_property
    def phase_mono(self) -> MonoPoly1:
        return self.tables.phase.to_mono()

    def phase_value(self, y) -> mpq:
        return mpq(self.tables.phase(mpq(y)))

    def phi_prime_at(self, y, a) -> mpq:
        """phi'(y, alpha) exactly at rational (y, a)."""
        al = self.alpha_at(a)
        omy = 1 - mpq(y)
        return -4 * al / omy ** 3 + 2 * al / omy ** 2 + 2 / (al * omy)


def build_profile(data_dir: str | None = None) -> Profile:
    return Profile(load_tables(data_dir))
