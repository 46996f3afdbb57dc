"""Table ingestion and the constructed profile objects."""

import os
import shutil

import pytest
from gmpy2 import mpq

from nlsverify.exact import GaussianRational, decimal_string
from nlsverify.poly import MonoPoly1
from nlsverify.profile import (
    A_STAR,
    TABLE_SPECS,
    TableCountError,
    TableFormatError,
    TableMissingError,
    default_data_dir,
    load_table,
    load_tables,
    serialize_table,
)

I = GaussianRational(0, 1)


# ---------------------------------------------------------------------------
# ingestion
# ---------------------------------------------------------------------------

def test_counts_and_known_row():
    raw = load_tables().raw
    for name, (count, _) in TABLE_SPECS.items():
        assert len(raw[name]) == count
    # first profile coefficient, exact
    assert raw["Pstar"][0].re == mpq(-2721451470460628, 1505677490833565)
    assert raw["Pstar"][0].im == mpq(-1078867762011625, 1320610492513519)
    assert raw["phitw"][0] == mpq(-355950139, 14657721)


def test_serialize_roundtrip(tmp_path):
    raw = load_tables().raw
    for name in ("Pstar", "phitw", "PLm"):
        text = serialize_table(name, raw[name])
        (tmp_path / f"{name}.dat").write_text(text)
        again = load_table(str(tmp_path), name)
        assert again == raw[name]


def test_missing_file(tmp_path):
    with pytest.raises(TableMissingError):
        load_table(str(tmp_path), "Pstar")


def _copy_table(tmp_path, name):
    src = os.path.join(default_data_dir(), f"{name}.dat")
    dst = tmp_path / f"{name}.dat"
    shutil.copy(src, dst)
    return dst


def test_duplicate_index(tmp_path):
    dst = _copy_table(tmp_path, "phitw")
    with open(dst, "a") as fh:
        fh.write("7 1/2\n")
    with pytest.raises(TableFormatError, match="duplicated"):
        load_table(str(tmp_path), "phitw")


def test_malformed_fraction(tmp_path):
    dst = _copy_table(tmp_path, "phitw")
    text = dst.read_text().replace("-355950139/14657721", "x/3")
    dst.write_text(text)
    with pytest.raises(TableFormatError):
        load_table(str(tmp_path), "phitw")


def test_wrong_count(tmp_path):
    dst = _copy_table(tmp_path, "phitw")
    lines = [l for l in dst.read_text().splitlines() if not l.startswith("40 ")]
    dst.write_text("\n".join(lines) + "\n")
    with pytest.raises(TableCountError):
        load_table(str(tmp_path), "phitw")


# ---------------------------------------------------------------------------
# smoke constants
# ---------------------------------------------------------------------------

def test_a_star_leading_digits():
    assert decimal_string(A_STAR, 10) == "0.9173561430"


def test_g_star_origin_value(profile):
    # the real part matches the known -1.88566 to 5 significant digits;
    # the imaginary part is tiny but nonzero
    g0 = profile.g_star_origin()
    assert decimal_string(g0.re, 5) == "-1.88565"  # truncated; rounds to -1.88566
    assert abs(g0.re - mpq(-188566, 100000)) < mpq(1, 100000)
    assert abs(g0.im) < mpq(1, 10**7)
    assert g0.im != 0


# ---------------------------------------------------------------------------
# constructed objects
# ---------------------------------------------------------------------------

def test_admissibility_identity(profile):
    dp1 = profile.dP_star_at_1
    for a in (0, mpq(1, 10**10), -mpq(1, 10**10)):
        al = A_STAR + a
        rhs = (GaussianRational(1) - I * al) / (2 * I * al) * profile.f_star_at(1, a)
        assert dp1 == rhs


def test_residual_matches_independent_evaluation(profile):
    # rebuild the residual at a point straight from its definition
    from gmpy2 import mpq as Q

    def oracle(y, a):
        al = A_STAR + Q(a)
        y = Q(y)
        f = profile.f_star_at(y, a)
        fp = profile.P_star_mono.derivative()(y)
        fpp = profile.P_star_mono.derivative(2)(y)
        one = GaussianRational(1)
        p0 = (4 * I * al) / (1 - y) ** 3 - (2 * I * al) / (1 - y) ** 2 \
            - (GaussianRational(2) + 2 * I / al) / (1 - y) + GaussianRational(Q(2) / (1 + y))
        q0 = -(GaussianRational(2) - 2 * I * al) / (1 - y) ** 3 \
            - (GaussianRational(1 / al ** 2) - I / al) / (1 - y) ** 2 \
            - (one + I / al) / (1 - y) - (one + I / al) / (1 + y)
        cal = fpp + p0 * fp + q0 * f + f * f * f.conjugate() / (1 - y) ** 2
        return profile.prefactor_at(a) * GaussianRational((1 + y) * (1 - y) ** 2) * cal

    R = profile.residual
    for (y, a) in ((0, 0), (mpq(1, 3), mpq(1, 10**10)), (mpq(-1, 2), -mpq(1, 10**10))):
        assert R(mpq(y), mpq(a)) == oracle(y, a)


def test_residual_degree(profile):
    assert profile.residual.deg1 <= 151
    assert profile.residual.deg2 <= 6


def test_P0_zero_columns(profile):
    for j in range(4):
        for k in (2, 3):
            assert profile.P0[j, k].is_zero()


def test_PdR_at_right_endpoint(profile):
    # derived identity: the right Wronskian polynomial at y = 1 collapses
    # to 16 alpha^8 (the leading oscillatory block is a rotation there)
    for a in (0, mpq(1, 10**10), -mpq(1, 10**10)):
        al = A_STAR + a
        assert profile.P_dR.subs2(mpq(a))(mpq(1)) == 16 * al ** 8


def test_decomposition_identity_in_indeterminates(profile):
    """The oscillatory split of the right system checked coefficientwise.

    With the oscillatory factors replaced by fresh indeterminates, writing
    e^{i phi} -> c + i s and e^{-i phi} -> c - i s, the third and fourth
    fundamental solutions become polynomials in (c, s) whose c- and
    s-coefficients must match the corresponding entries of the PC/PS block
    matrices (after removing the alpha^2 (1-y)^2 normalization).  Checked
    at random rational (y, a): never numerically through transcendentals.
    """
    import random
    rng = random.Random(11)
    PR, QR = profile._right_tables
    for _ in range(20):
        y = mpq(rng.randint(0, 900), 1000)
        a = mpq(rng.randint(-10, 10), 10**11)
        al = A_STAR + a
        omy = 1 - y
        two_al = GaussianRational(2 * al)
        bracket3 = GaussianRational(1) \
            + (GaussianRational(2 * al, -1) / two_al) * GaussianRational(omy) \
            + GaussianRational(omy ** 2) * PR[3](y)
        # f_{R,3} = (c + i s)(1-y) bracket3 + (c - i s)(1-y)^5 Q_{R,3}
        c_coeff = GaussianRational(omy) * bracket3 + GaussianRational(omy ** 5) * QR[3](y)
        s_coeff = I * GaussianRational(omy) * bracket3 - I * GaussianRational(omy ** 5) * QR[3](y)
        al2omy2 = al ** 2 * omy ** 2
        pc = profile.PC[0, 2](y, a) / al2omy2
        qc = profile.PC[1, 2](y, a) / al2omy2
        ps = profile.PS[0, 2](y, a) / al2omy2
        qs = profile.PS[1, 2](y, a) / al2omy2
        assert GaussianRational(pc, qc) == c_coeff
        assert GaussianRational(ps, qs) == s_coeff
        # and the fourth solution is i times the same structure with Q_{R,4}
        bracket4 = GaussianRational(1) \
            + (GaussianRational(2 * al, -1) / two_al) * GaussianRational(omy) \
            + GaussianRational(omy ** 2) * PR[4](y)
        c4 = I * GaussianRational(omy) * bracket4 + I * GaussianRational(omy ** 5) * QR[4](y)
        pc4 = profile.PC[0, 3](y, a) / al2omy2
        qc4 = profile.PC[1, 3](y, a) / al2omy2
        assert GaussianRational(pc4, qc4) == c4


def test_exp_i_rectangle_at_phase_endpoint(profile):
    """The rectangle fed to the oscillatory window task, cross-checked
    against a high-precision oracle."""
    import mpmath
    from nlsverify.exact import exp_i_enclose

    mpmath.mp.dps = 40
    x = profile.phase_value(mpq(7, 10))
    rect = exp_i_enclose(x, mpq(1, 10**20))
    xf = mpmath.mpf(int(x.numerator)) / mpmath.mpf(int(x.denominator))
    c, s = mpmath.cos(xf), mpmath.sin(xf)

    def inside(enc, v):
        lo = mpmath.mpf(int(enc.lo.numerator)) / mpmath.mpf(int(enc.lo.denominator))
        hi = mpmath.mpf(int(enc.hi.numerator)) / mpmath.mpf(int(enc.hi.denominator))
        return lo - mpmath.mpf("1e-30") <= v <= hi + mpmath.mpf("1e-30")

    assert inside(rect.re, c) and inside(rect.im, s)
    assert rect.re.width <= mpq(3, 10**20)


def test_poly_text_roundtrip():
    from nlsverify.poly import poly_from_text, poly_to_text
    p = MonoPoly1([mpq(1, 3), 0, GaussianRational(mpq(-2, 7), mpq(5))])
    assert poly_from_text(poly_to_text(p)).coeffs == p.coeffs
    assert poly_from_text("").is_zero()


def test_gamma_values_finite_and_sized(profile):
    for k, cap in ((3, mpq(99, 10)), (4, mpq(35, 10))):
        for a in (profile.a_minus, profile.a_plus):
            g = profile.gamma_at(k, a)
            assert abs(g) <= cap


def test_degree_audit_records(profile):
    profile.residual, profile.P_dR  # force construction
    names = [row[0] for row in profile.degree_audit]
    assert "residual R" in names and "P_dR" in names
    assert all(row[3] for row in profile.degree_audit)
