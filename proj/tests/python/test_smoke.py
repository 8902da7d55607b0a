import pytest

import siegeltheta as st


def test_eisenstein_coefficients():
    e4 = st.eisenstein(4, 6)
    assert e4.coefficient([[0]]) == "1/1"
    assert e4.coefficient([[2]]) == "240/1"
    assert e4.coefficient([[4]]) == "2160/1"


def test_delta_and_hecke_eigenvalue():
    d = st.delta(14)
    assert d.coefficient([[2]]) == "1/1"
    assert st.hecke_eigenvalue("T(2)", 12, d) == "-24/1"


def test_product_matches_weight_ten_series():
    e4 = st.eisenstein(4, 5)
    e6 = st.eisenstein(6, 5)
    e10 = e4 * e6
    assert e10.coefficient([[2]]) == "-264/1"
    assert e10.weight == 10


def test_theta_routes_agree():
    p = 5
    f = st.delta(12)
    via = st.theta_bn_via_bracket(f, st.eisenstein(p - 1, 12), p)
    direct = st.theta_bn(st.reduce_mod_p(f, p))
    assert via.terms() == direct.terms()


def test_commutation_and_cosets():
    d7 = st.reduce_mod_p(st.delta(12), 7)
    ok, detail = st.commutation_check(d7, 12, "T(2)")
    assert ok, detail
    assert len(st.coset_reps(1, 3, [1, 1])) == 4
    assert len(st.coset_reps(2, 2, [1, 1, 1])) == 15


def test_rootdatum_helpers():
    assert st.eta_exponent([1, 1, 1]) == 1
    assert all(st.eta_exponent(c) == 0 for c in st.positive_coroots(3))
    assert st.dominance_witness([2, 2], [1, 2]) == [1]
    assert st.dominance_witness([1, 1, 1], [1, 1, 0]) is None
    weights = st.weights_of_irrep([1, 1])
    assert weights == {(0, 1): 1, (1, 1): 1} or weights == {
        tuple([0, 1]): 1,
        tuple([1, 1]): 1,
    }


def test_main_theorem_replay():
    assert st.main_theorem_verify_random(1, 1, 2, 7, trials=5, seed=1)
    assert st.main_theorem_verify_random(2, 2, 3, 7, trials=5, seed=2)


def test_file_format_round_trip():
    e6 = st.eisenstein(6, 8)
    text = e6.to_text()
    again = st.QExpansion.from_text(text)
    assert again == e6
    assert again.to_text() == text


def test_domain_errors_surface():
    with pytest.raises(st.DomainError):
        st.eisenstein(5, 4)  # odd weight
    with pytest.raises(st.DomainError):
        st.reduce_mod_p(st.eisenstein(4, 4), 6)  # not prime
