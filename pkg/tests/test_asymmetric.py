import pytest

from charfactor.asymmetric import (
    AsymmetricSpec,
    LengthBoundError,
    beta_deletion_check,
    brute_force_t_cores,
    build_asymmetric,
    classify_even,
    classify_odd,
    classify_schur,
    classify_symp,
    converse_sym_index,
    detect_asymmetric,
    enumerate_asymmetric_tcores,
    enumerate_t_cores,
    odd_surplus_runner,
)
from charfactor.partitions import (
    frobenius,
    partitions_up_to,
    rank,
    residue_profile,
    t_core,
)

FAMILY_SPECS = {
    "oo": (classify_odd, [(2, 0), (2, 1)]),
    "sp": (classify_symp, [(3, 0), (3, 2)]),
    "oe": (classify_even, [(1, 0)]),
}


def brute_asymmetric_k(lam, z1, z2):
    """Definition-level test: try every k and rebuild from the alpha side."""
    f = frobenius(lam)
    for k in range(len(f.alpha) + 1):
        try:
            if build_asymmetric(f.alpha, AsymmetricSpec(z1, z2, k)) == lam:
                return k
        except ValueError:
            pass
    return None


def test_build_examples():
    assert build_asymmetric((0,), AsymmetricSpec(2, 0, 1)) == (1,)
    assert build_asymmetric((1,), AsymmetricSpec(2, 1, 1)) == (2, 1)
    assert build_asymmetric((2, 0), AsymmetricSpec(2, 0, 1)) == (3, 2, 1)
    assert build_asymmetric((), AsymmetricSpec(3, 2, 0)) == ()


def test_spec_validation():
    with pytest.raises(ValueError):
        AsymmetricSpec(1, 1, 0)
    with pytest.raises(ValueError):
        AsymmetricSpec(2, 0, -1)


def test_detect_examples():
    assert detect_asymmetric((), 2, 0) == 0
    assert detect_asymmetric((3, 2, 1), 2, 0) == 1
    # (2) = (1|0): drop 1 + 2 from the leg side and append z2 = 0
    assert detect_asymmetric((2,), 2, 0) == 1
    assert detect_asymmetric((2,), 2, 1) is None


@pytest.mark.parametrize("z1,z2", [(1, 0), (2, 0), (2, 1), (3, 0), (3, 2)])
def test_detect_matches_definition(z1, z2):
    for lam in partitions_up_to(14):
        assert detect_asymmetric(lam, z1, z2) == brute_asymmetric_k(lam, z1, z2), lam


def test_beta_deletion_examples():
    assert beta_deletion_check((1,), 3, AsymmetricSpec(2, 0, 1))
    assert beta_deletion_check((), 5, AsymmetricSpec(2, 0, 0))
    assert beta_deletion_check((2,), 3, AsymmetricSpec(2, 0, 1))
    assert not beta_deletion_check((2,), 3, AsymmetricSpec(2, 1, 1))
    assert not beta_deletion_check((1, 1), 3, AsymmetricSpec(2, 0, 1))


@pytest.mark.parametrize("z1,z2", [(1, 0), (2, 0), (2, 1), (3, 0), (3, 2)])
def test_beta_deletion_matches_detection(z1, z2):
    for lam in partitions_up_to(12):
        k = detect_asymmetric(lam, z1, z2)
        for ell in (len(lam) + z1, len(lam) + z1 + 2):
            for kk in range(rank(lam) + 1):
                assert beta_deletion_check(lam, ell, AsymmetricSpec(z1, z2, kk)) == (k == kk), (lam, ell, kk)


def test_classify_schur_examples():
    assert classify_schur((), 3, 2, 0) == ()
    assert classify_schur((2, 1, 1), 2, 1, 1) == ()
    assert classify_schur((1,), 2, 1, 0) is None
    with pytest.raises(ValueError):
        classify_schur((1,), 2, 1, 2)
    with pytest.raises(LengthBoundError):
        classify_schur((1, 1, 1, 1), 2, 1, 1)


def test_classify_odd_examples():
    assert classify_odd((), 3, 2).i0 == 0
    # the t = 2 worked example calls the surplus runner i_0 = 1; the pair index is 0
    assert classify_odd((1,), 2, 1).i0 == 0
    assert odd_surplus_runner((1,), 2, 1) == 1
    assert odd_surplus_runner((), 2, 1) == 0
    assert odd_surplus_runner((2, 1), 2, 1) == 0
    assert odd_surplus_runner((3, 2, 1), 2, 1) == 1
    assert classify_odd((6, 4, 2), 3, 1).vanishes
    assert odd_surplus_runner((6, 4, 2), 3, 1) is None


def test_classify_symp_examples():
    assert classify_symp((1,), 2, 1).i0 == 1
    assert classify_symp((), 4, 2).i0 == 0
    assert classify_symp((2, 1), 2, 1).vanishes


def test_classify_even_examples():
    c = classify_even((), 3, 2)
    assert (c.i0, c.case) == (0, 1)
    assert classify_even((1,), 2, 1).i0 == 1
    assert classify_even((2, 1), 2, 1).vanishes
    assert c.to_json() == {"vanishes": False, "i0": 0, "case": 1}
    assert classify_even((2, 1), 2, 1).to_json() == {"vanishes": True}


@pytest.mark.parametrize("family", sorted(FAMILY_SPECS))
def test_nonvanishing_iff_core_in_family(family):
    classify, specs = FAMILY_SPECS[family]
    for t in range(2, 6):
        for n in (1, 2):
            for lam in partitions_up_to(12, t * n + 1):
                core = t_core(lam, t, t * n + 1)
                member = any(detect_asymmetric(core, z1, z2) is not None for z1, z2 in specs)
                assert member != classify(lam, t, n).vanishes, (family, t, n, lam)


@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_converse_lemma_on_cores(t):
    # z = -1, 0, 1 correspond to Q(1,0), Q(2,0) | Q(2,1), Q(3,0) | Q(3,2)
    families = {-1: [(1, 0)], 0: [(2, 0), (2, 1)], 1: [(3, 0), (3, 2)]}
    for core in enumerate_t_cores(t, 30):
        n = max(1, -(-(len(core) - 1) // t))
        for z, specs in families.items():
            member = any(detect_asymmetric(core, a, b) is not None for a, b in specs)
            assert member == (converse_sym_index(core, t, n, z) is not None), (t, z, core)


@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_enumerate_t_cores_matches_brute_force(t):
    assert sorted(enumerate_t_cores(t, 25)) == sorted(brute_force_t_cores(t, 25))


@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_rank_lemmas(t):
    for core in enumerate_t_cores(t, 30):
        for n in range(4):
            if len(core) <= t * n:
                p = residue_profile(core, t * n, t)
                assert rank(core) == sum(max(c - n, 0) for c in p)
            if len(core) <= t * n + 1:
                p = residue_profile(core, t * n + 1, t)
                assert rank(core) == max(p[0] - n - 1, 0) + sum(max(c - n, 0) for c in p[1:])


def test_profile_depends_only_on_core():
    for t in (2, 3, 4):
        for lam in partitions_up_to(12, 3 * t):
            ell = 3 * t
            assert residue_profile(lam, ell, t) == residue_profile(t_core(lam, t, ell), ell, t)


def test_enumerate_asymmetric_tcores():
    spec = AsymmetricSpec(2, 0, 1)
    got = enumerate_asymmetric_tcores(spec, 3, 10)
    assert got == [lam for lam in brute_force_t_cores(3, 10) if detect_asymmetric(lam, 2, 0) == 1]
    assert (1,) in got
