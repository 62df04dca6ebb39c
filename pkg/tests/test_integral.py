import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitcert import integral as ig
from orbitcert import rootsys as rs


def test_e8_flagship_integral_system(e8, flagship_lambda_prime, flagship_integral_simples):
    isys = ig.integral_system(e8, flagship_lambda_prime)
    assert isys.cartan_type == ("A5", "A2", "A1")
    assert frozenset(isys.simple_system) == flagship_integral_simples
    assert isys.size == 38
    values = sorted(rs.pairing(e8, flagship_lambda_prime, b) for b in isys.simple_system)
    assert set(values) == {1, 2}


def test_integral_system_of_rho(e8):
    isys = ig.integral_system(e8, rs.rho(e8))
    assert isys.size == 240
    assert isys.cartan_type == ("E8",)
    assert set(isys.simple_system) == set(e8.simple_roots)


def test_integral_system_empty():
    a1 = rs.build("A1")
    isys = ig.integral_system(a1, Fr(1, 3) * a1.simple_roots[0])
    assert isys.size == 0
    assert isys.cartan_type == ()
    assert isys.simple_system == ()


def test_integral_system_negation_closed(e8, flagship_lambda_prime):
    isys = ig.integral_system(e8, flagship_lambda_prime)
    roots = set(isys.coroots)
    assert all(-b in roots for b in roots)


def test_integral_system_reflection_stable(e8, flagship_lambda_prime):
    isys = ig.integral_system(e8, flagship_lambda_prime)
    roots = set(isys.coroots)
    for simple in isys.simple_system:
        for beta in roots:
            image = beta - rs.pairing(e8, beta, simple) * simple
            assert image in roots


def test_integral_system_b_c_dualization():
    b4 = rs.build("B4")
    lp = rs.weight((Fr(1, 2), Fr(1, 2), Fr(1, 2), 0))
    isys = ig.integral_system(b4, lp)
    # the coroot subsystem has a C3 component; the root side reports B3
    assert isys.cartan_type == ("B3", "A1")
    assert isys.size == 20
    c3 = rs.build("C3")
    lp = rs.weight((Fr(1, 2), Fr(1, 2), 0))
    isys = ig.integral_system(c3, lp)
    # long coroots (e_i+-e_j)/1... pair integrally iff i,j <= 2; short e_i stay
    assert sum(rs.positive_count(lbl) for lbl in isys.cartan_type) * 2 == isys.size


def test_integral_simples_are_positive_roots(e8, flagship_lambda_prime):
    isys = ig.integral_system(e8, flagship_lambda_prime)
    assert all(e8.is_positive_root(b) for b in isys.simple_system)


# antidominant representatives -------------------------------------------------

def test_antidominant_already_there(e8):
    _, simp = rs.levi_subsystem(e8, (0, 2))
    mu = -2 * rs.rho(e8)
    res = ig.antidominant_rep(e8, simp, mu)
    assert res.word == () and res.weight == mu and res.minimal


def test_antidominant_single_reflection():
    a1 = rs.build("A1")
    alpha = a1.simple_roots[0]
    mu = Fr(3, 2) * alpha  # <mu, alpha^vee> = 3
    res = ig.antidominant_rep(a1, (alpha,), mu)
    assert res.word == (0,)
    assert rs.pairing(a1, res.weight, alpha) == -3
    assert res.minimal


def test_antidominant_flagship_word_length(e8, flagship_lambda_prime):
    isys = ig.integral_system(e8, flagship_lambda_prime)
    res = ig.antidominant_rep(e8, isys.simple_system, flagship_lambda_prime)
    sub_pos = ig._subsystem_positive(list(isys.simple_system))
    inversions = sum(1 for g in sub_pos if flagship_lambda_prime.dot(g) > 0)
    assert res.minimal
    assert len(res.word) == inversions
    assert all(rs.pairing(e8, res.weight, b) <= 0 for b in isys.simple_system)
    assert ig.apply_word(isys.simple_system, res.word, flagship_lambda_prime) == res.weight


def test_antidominant_singular_flagged(e8):
    _, simp = rs.levi_subsystem(e8, (0, 1))
    mu = rs.fundamental_weights(e8)[0]  # vanishes on alpha_2's coroot
    res = ig.antidominant_rep(e8, simp, mu)
    assert not res.minimal
    assert all(rs.pairing(e8, res.weight, b) <= 0 for b in simp)


@settings(max_examples=30)
@given(st.integers(0, 10**9))
def test_antidominant_replay_property(seed):
    rng = random.Random(seed)
    model = rs.build(rng.choice(["B3", "G2", "A4", "D4"]))
    mu = rs.weight([Fr(rng.randint(-8, 8), rng.randint(1, 3))
                    for _ in range(model.ambient_dim)])
    res = ig.antidominant_rep(model, model.simple_roots, mu)
    assert ig.apply_word(model.simple_roots, res.word, mu) == res.weight
    assert all(rs.pairing(model, res.weight, a) <= 0 for a in model.simple_roots)


# dimension formulas -----------------------------------------------------------

def test_cor68_flagship(e8, flagship_lambda_prime):
    assert ig.cor68_dim(e8, flagship_lambda_prime) == 202


@pytest.mark.parametrize("label", ["A4", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"])
def test_cor68_at_rho_is_zero(label):
    model = rs.build(label)
    assert ig.cor68_dim(model, rs.rho(model)) == 0


def test_cor68_not_applicable(e8):
    assert ig.cor68_dim(e8, -rs.rho(e8)) is None


def test_prop67_values():
    assert ig.prop67_dim(248, 46, 0) == 202
    assert ig.prop67_dim(14, 14, 0) == 0
    # w = identity: dim O_w = dim g(lambda) - rank gives the nilpotent cone
    assert ig.prop67_dim(248, 248, 248 - 8) == 240


def test_prop67_rejects_bad_inputs():
    with pytest.raises(ValueError):
        ig.prop67_dim(46, 248, 0)
    with pytest.raises(ValueError):
        ig.prop67_dim(-1, 0, 0)
    with pytest.raises(ValueError):
        ig.prop67_dim(10, 4, -2)


# random-weight properties -----------------------------------------------------

@pytest.mark.parametrize("label", ["B3", "C3", "F4", "G2", "E6"])
def test_integral_component_counts_on_random_weights(label):
    model = rs.build(label)
    rng = random.Random(hash(label) % (2**32))
    for _ in range(40):
        mu = rs.weight([Fr(rng.randint(-6, 6), rng.choice([1, 1, 2, 3]))
                        for _ in range(model.ambient_dim)])
        isys = ig.integral_system(model, mu)
        for i, a in enumerate(isys.simple_system):
            for b in isys.simple_system[i + 1:]:
                assert a.dot(b) <= 0
        assert 2 * sum(rs.positive_count(lbl) for lbl in isys.cartan_type) == isys.size
