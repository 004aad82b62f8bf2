import random

import pytest

from genus3bounds.hermite import (
    HermitianForm2,
    HermitianForm3,
    IncompleteForDiscriminant,
    NotPositiveDefinite,
    canonical_key,
    disc2,
    enumerate_reduced2,
    form_from_dict,
    form_to_dict,
    hoffmann_exists,
    is_indecomposable,
    minimum2,
    reduce2,
    represents_one,
    search_unimodular_indecomposable3,
    transform2,
    vectors_with_value2,
)
from genus3bounds.qorder import OrderElement, covering_radius_sq, norm_representations

PAPER_D4 = HermitianForm2(-4, 2, 2, OrderElement(-4, 1, 1))   # [[2, 1+i], [1-i, 2]]
PAPER_D8 = HermitianForm2(-8, 2, 2, OrderElement(-8, 0, 1))   # [[2, -sqrt(-2)], [sqrt(-2), 2]]


def _random_pd_form(rng, d, max_entry=9):
    while True:
        lam = rng.randint(1, max_entry)
        mu = rng.randint(1, max_entry)
        alpha = OrderElement(d, rng.randint(-max_entry, max_entry), rng.randint(-max_entry, max_entry))
        f = HermitianForm2(d, lam, mu, alpha)
        if f.is_positive_definite():
            return f


def test_disc_examples():
    assert disc2(PAPER_D4) == 2
    assert disc2(PAPER_D8) == 2
    assert disc2(HermitianForm2(-3, 1, 2, OrderElement(-3, 0, 0))) == 2


def test_represents_one():
    assert represents_one(PAPER_D4) is None
    assert represents_one(PAPER_D8) is None
    diag12 = HermitianForm2(-4, 1, 2, OrderElement(-4, 0, 0))
    witness = represents_one(diag12)
    assert witness is not None and diag12.value(*witness) == 1


def test_paper_forms_take_only_even_values():
    for form in (PAPER_D4, PAPER_D8):
        for target in range(1, 11):
            vecs = vectors_with_value2(form, target)
            if target % 2 == 1:
                assert vecs == []
            for vec in vecs:
                assert form.value(*vec) == target


def test_indecomposability_verdicts():
    assert is_indecomposable(PAPER_D4).indecomposable
    assert is_indecomposable(PAPER_D8).indecomposable
    v = is_indecomposable(HermitianForm2(-3, 1, 2, OrderElement(-3, 0, 0)))
    assert not v.indecomposable
    v = is_indecomposable(HermitianForm3(-3, (1, 1, 1), *(OrderElement(-3, 0, 0),) * 3))
    assert not v.indecomposable and v.certified


def test_orthogonal_pair_search_other_discriminants():
    # diag(2, 3) over R_-4: discriminant 6, visibly decomposable
    v = is_indecomposable(HermitianForm2(-4, 2, 3, OrderElement(-4, 0, 0)))
    assert not v.indecomposable and v.witness is not None


def test_reduce2_examples():
    red, u = reduce2(HermitianForm2(-3, 2, 1, OrderElement(-3, 0, 0)))
    assert (red.lam, red.mu) == (1, 2)
    # alpha shifted into the cell; disc 1 form collapses to diag(1, 1)
    g = HermitianForm2(-3, 1, 2, OrderElement(-3, 0, 1))
    red, u = reduce2(g)
    assert (red.lam, red.mu, red.alpha.u, red.alpha.v) == (1, 1, 0, 0)
    assert transform2(g, u).key() == red.key()
    again, _ = reduce2(red)
    assert again.key() == red.key()
    with pytest.raises(NotPositiveDefinite):
        reduce2(HermitianForm2(-3, 1, 1, OrderElement(-3, 5, 0)))


def test_reduce2_random_properties():
    rng = random.Random(12)
    for d in (-3, -4, -7, -8, -11):
        c = covering_radius_sq(d)
        for _ in range(400):
            f = _random_pd_form(rng, d)
            red, u = reduce2(f)
            assert red.disc() == f.disc()
            assert transform2(f, u).key() == red.key()
            assert red.lam <= red.mu
            assert red.alpha.norm() <= c * red.lam**2
            assert minimum2(red) == red.lam
            again, _ = reduce2(red)
            assert again.key() == red.key()


def test_reduce2_preserves_represented_values():
    rng = random.Random(13)
    for d in (-3, -4, -8, -11):
        for _ in range(25):
            f = _random_pd_form(rng, d, max_entry=5)
            red, _ = reduce2(f)
            for target in range(1, 21):
                assert len(vectors_with_value2(f, target)) == len(vectors_with_value2(red, target)), (
                    d,
                    f,
                    target,
                )


@pytest.mark.parametrize("d", [-3, -11])
def test_enumerate_disc2_no_indecomposable(d):
    classes = enumerate_reduced2(d, 2)
    assert len(classes) == 1
    only = classes[0]
    assert (only.form.lam, only.form.mu) == (1, 2) and not only.form.alpha
    assert not only.indecomposable


@pytest.mark.parametrize("d,paper", [(-4, PAPER_D4), (-8, PAPER_D8)])
def test_enumerate_disc2_with_indecomposable(d, paper):
    classes = enumerate_reduced2(d, 2)
    assert len(classes) == 2
    indec = [c for c in classes if c.indecomposable]
    assert len(indec) == 1
    assert canonical_key(indec[0].form) == canonical_key(paper)


def test_enumerate_disc1():
    classes = enumerate_reduced2(-3, 1)
    assert len(classes) == 1
    assert (classes[0].form.lam, classes[0].form.mu) == (1, 1)
    with pytest.raises(IncompleteForDiscriminant):
        enumerate_reduced2(-15, 2)  # covering radius squared >= 1


def test_enumeration_complete_on_small_boxes():
    for d in (-3, -4, -8, -11):
        for disc in (1, 2, 3):
            keys = {canonical_key(c.form) for c in enumerate_reduced2(d, disc)}
            for lam in range(1, 7):
                for mu in range(1, 7):
                    n = lam * mu - disc
                    if n < 0:
                        continue
                    for alpha in norm_representations(d, n):
                        f = HermitianForm2(d, lam, mu, alpha)
                        if f.is_positive_definite():
                            assert canonical_key(f) in keys, (d, disc, f)


def test_unimodular_criterion_matches_minimum():
    rng = random.Random(15)
    for d in (-3, -4, -7, -8, -11, -19):
        hits = search_unimodular_indecomposable3(d, 4)
        for f in hits:
            assert represents_one(f) is None
        # rank 2 unimodular: indecomposable iff minimum >= 2 (always decomposable here)
        for _ in range(50):
            f = _random_pd_form(rng, d, max_entry=6)
            if f.disc() != 1:
                continue
            red, _ = reduce2(f)
            assert (minimum2(red) >= 2) == is_indecomposable(red).indecomposable


def test_rank3_search_witnesses():
    w7 = search_unimodular_indecomposable3(-7, 8, limit=1)
    assert w7
    f = w7[0]
    assert f.det() == 1 and f.is_positive_definite() and represents_one(f) is None
    assert search_unimodular_indecomposable3(-19, 8, limit=1)
    assert search_unimodular_indecomposable3(-7, 6, limit=1)


def test_rank3_value_and_det_consistency():
    f = search_unimodular_indecomposable3(-7, 6, limit=1)[0]
    e1 = (OrderElement(-7, 1, 0), OrderElement(-7, 0, 0), OrderElement(-7, 0, 0))
    assert f.value(*e1) == f.diag[0]


def test_hoffmann_table():
    assert hoffmann_exists(3, -3) is False
    assert hoffmann_exists(3, -4) is False
    assert hoffmann_exists(3, -8) is False
    assert hoffmann_exists(3, -11) is False
    assert hoffmann_exists(3, -20) is True
    assert hoffmann_exists(3, -7) is True
    assert hoffmann_exists(2, -7) is False
    assert hoffmann_exists(2, -8) is True
    with pytest.raises(ValueError):
        hoffmann_exists(4, -3)


def test_serialization_round_trip():
    for f in (PAPER_D4, PAPER_D8, search_unimodular_indecomposable3(-7, 6, limit=1)[0]):
        rec = form_to_dict(f)
        back = form_from_dict(rec)
        assert back.key() == f.key()
