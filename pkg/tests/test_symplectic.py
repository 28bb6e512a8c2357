import random

import pytest

from agstab.errors import CertificationError
from agstab.fields import EPS, EPS_BAR, conj4, get_field
from agstab.linear import binary_code, make_code
from agstab.symplectic import (
    gf4_weight,
    make_symplectic,
    min_symplectic_weight,
    pack_gf4,
    quantum_bound,
    quantum_params,
    steane_compose,
    symplectic_dual,
    symplectic_form,
    unpack_gf4,
)

GF2 = get_field(1)
GF4 = get_field(2)

EXT_HAMMING = binary_code(8, [0b11111111, 0b01010101, 0b00110011, 0b00001111])
EVEN = binary_code(8, [(1 << i) | (1 << 7) for i in range(7)])

F422_VECS = [pack_gf4((EPS,) * 4), pack_gf4((EPS_BAR,) * 4)]


def test_pack_unpack_round_trip():
    rng = random.Random(3)
    for _ in range(30):
        word = tuple(rng.randrange(4) for _ in range(6))
        assert unpack_gf4(pack_gf4(word), 6) == word


def test_weight_counts_nonzero_symbols():
    word = (0, 1, EPS, EPS_BAR, 0)
    assert gf4_weight(pack_gf4(word), 5) == 3


class TestForm:
    def test_alternating(self):
        rng = random.Random(4)
        for _ in range(50):
            x = rng.randrange(1 << 12)
            assert symplectic_form(x, x, 6) == 0

    def test_symmetric(self):
        rng = random.Random(5)
        for _ in range(50):
            x, y = rng.randrange(1 << 12), rng.randrange(1 << 12)
            assert symplectic_form(x, y, 6) == symplectic_form(y, x, 6)

    def test_conjugate_quadruple_vanishes(self):
        x = pack_gf4((EPS,) * 4)
        y = pack_gf4((EPS_BAR,) * 4)
        assert symplectic_form(x, y, 4) == 0

    def test_single_position_pairs_to_one(self):
        x = pack_gf4((EPS, 0))
        y = pack_gf4((EPS_BAR, 0))
        assert symplectic_form(x, y, 2) == 1

    def test_matches_trace_of_conjugate_product(self):
        rng = random.Random(6)
        for _ in range(40):
            xw = tuple(rng.randrange(4) for _ in range(5))
            yw = tuple(rng.randrange(4) for _ in range(5))
            via_trace = 0
            for a, b in zip(xw, yw):
                via_trace ^= GF4.trace(GF4.mul(a, conj4(b)))
            assert symplectic_form(pack_gf4(xw), pack_gf4(yw), 5) == via_trace


class TestDual:
    def test_zero_space(self):
        f = make_symplectic(3, [])
        dual = symplectic_dual(f)
        assert dual.k_dim == 6
        assert dual.is_large

    def test_four_qubit_instance(self):
        f = make_symplectic(4, F422_VECS)
        assert f.k_dim == 2 and f.is_isotropic and not f.is_large
        dual = symplectic_dual(f)
        assert dual.k_dim == 6
        assert dual.space.contains(f.space)

    def test_dimension_sum(self):
        rng = random.Random(8)
        for _ in range(15):
            vecs = [rng.randrange(1 << 10) for _ in range(rng.randint(0, 6))]
            f = make_symplectic(5, vecs)
            assert f.k_dim + symplectic_dual(f).k_dim == 10

    def test_isotropy_extends_to_random_span_elements(self):
        f = make_symplectic(4, F422_VECS)
        rng = random.Random(9)
        rows = f.space.bit_rows
        for _ in range(100):
            x = 0
            y = 0
            for r in rows:
                if rng.random() < 0.5:
                    x ^= r
                if rng.random() < 0.5:
                    y ^= r
            assert symplectic_form(x, y, 4) == 0


class TestSteaneCompose:
    def test_ext_hamming_even_instance(self):
        f = steane_compose(EXT_HAMMING, EVEN)
        assert f.k_dim == 11
        assert f.is_large
        assert f.distance_bound == 3  # min(d=4, or2=3)
        dual = symplectic_dual(f)
        assert f.space.contains(dual.space)
        assert dual.is_isotropic

    def test_enumerated_weight_meets_bound(self):
        f = steane_compose(EXT_HAMMING, EVEN)
        assert min_symplectic_weight(f) >= f.distance_bound

    def test_identical_codes_rejected(self):
        with pytest.raises(ValueError):
            steane_compose(EXT_HAMMING, EXT_HAMMING)

    def test_thin_enlargement_rejected(self):
        bigger = binary_code(8, list(EXT_HAMMING.bit_rows) + [0b00000011])
        with pytest.raises(ValueError):
            steane_compose(EXT_HAMMING, bigger)

    def test_chain_violations_rejected(self):
        not_contained = binary_code(8, [1, 2, 4, 8, 16, 32])
        with pytest.raises(ValueError):
            steane_compose(EXT_HAMMING, not_contained)
        no_dual = binary_code(8, [0b00000001, 0b00000010])
        sup = binary_code(8, [1, 2, 4, 8])
        with pytest.raises(ValueError):
            steane_compose(no_dual, sup)

    def test_dimension_bookkeeping(self):
        f = steane_compose(EXT_HAMMING, EVEN)
        assert f.k_dim == EXT_HAMMING.k_dim + EVEN.k_dim


class TestQuantumParams:
    def test_steane_instance_is_8_3_3(self):
        f = steane_compose(EXT_HAMMING, EVEN)
        rep = quantum_params(f)
        assert (rep.n, rep.k_q) == (8, 3)
        assert rep.d_q == 3 and rep.d_exact
        assert rep.d_witness is not None
        assert sum(1 for s in rep.d_witness if s) == 3
        assert rep.k_q == f.k_dim - f.n

    def test_small_code_roles_swap(self):
        f = make_symplectic(4, F422_VECS)
        rep = quantum_params(f)
        assert (rep.n, rep.k_q) == (4, 2)
        assert rep.d_q == 2 and rep.d_exact

    def test_full_space(self):
        full = make_symplectic(3, [1 << i for i in range(6)])
        rep = quantum_params(full)
        assert rep.k_q == 3
        assert rep.d_q == 1

    def test_budget_fallback_reports_bound(self):
        f = steane_compose(EXT_HAMMING, EVEN)
        rep = quantum_params(f, budget=16, fallback_bound=3)
        assert rep.d_q == 3 and not rep.d_exact

    def test_neither_flag_rejected(self):
        crooked = make_symplectic(2, [pack_gf4((EPS, 0)), pack_gf4((EPS_BAR, 0))])
        assert not crooked.is_isotropic and not crooked.is_large
        with pytest.raises(ValueError):
            quantum_params(crooked)


def test_quantum_bound():
    assert quantum_bound(4, 3) == 3
    assert quantum_bound(3, 5) == 3
    with pytest.raises(ValueError):
        quantum_bound(0, 3)


def test_bound_via_or_weight_never_below_three_halves_form():
    # min(d, or2) >= min(d, ceil(3 d'/2)) since or2 >= ceil(3 d'/2)
    rng = random.Random(31)
    done = 0
    while done < 20:
        n = rng.randint(4, 10)
        c = binary_code(n, [rng.randrange(1, 1 << n) for _ in range(3)])
        if c.k_dim < 2:
            continue
        d_prime = c.min_distance_exact()
        or2 = c.second_or_weight()
        for d in (1, 2, 3, 5):
            assert quantum_bound(d, or2) >= quantum_bound(d, -(-3 * d_prime // 2))
        done += 1


def test_witness_lies_outside_the_dual():
    f = steane_compose(EXT_HAMMING, EVEN)
    rep = quantum_params(f)
    packed = pack_gf4(rep.d_witness)
    dual = symplectic_dual(f)
    assert f.space.contains(binary_code(16, [packed]))
    assert not dual.space.contains(binary_code(16, [packed]))


def test_coset_enumeration_python_fallback_matches_numpy():
    # widths beyond 63 bits take the plain-int path; compare both on the
    # same structure, one shifted past the numpy cutoff
    from agstab.symplectic import _min_weight_difference

    small_rows = [pack_gf4((EPS,) * 4)]
    big_rows = small_rows + [pack_gf4((EPS_BAR,) * 4), pack_gf4((1, 1, 0, 0))]
    small8 = binary_code(8, small_rows)
    big8 = binary_code(8, big_rows)
    w8, _ = _min_weight_difference(big8, small8, 4)

    def widen(v):  # re-embed (a|b) at n=4 into n=40 with zero padding
        a, b = v & 0xF, v >> 4
        return a | (b << 40)

    small80 = binary_code(80, [widen(r) for r in small_rows])
    big80 = binary_code(80, [widen(r) for r in big_rows])
    w80, _ = _min_weight_difference(big80, small80, 40)
    assert w8 == w80


def test_make_symplectic_rejects_wide_vectors():
    with pytest.raises(ValueError):
        make_symplectic(2, [1 << 4])
