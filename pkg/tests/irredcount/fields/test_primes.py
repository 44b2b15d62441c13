import numpy as np
import pytest
from sympy import primerange

from irredcount.core.errors import UnsupportedFieldError
from irredcount.core.splitting import Splitting
from irredcount.fields import primes as primes_module
from irredcount.fields.primes import (
    PrimeIdealRecord,
    is_principal,
    kronecker_table,
    principal_residue_table,
    prime_arrays,
    prime_ideals_up_to,
    primes_up_to,
)
from irredcount.fields.quadratic import kronecker, make_field


def test_primes_up_to_small_limits():
    assert primes_up_to(1).tolist() == []
    assert primes_up_to(2).tolist() == [2]
    assert primes_up_to(3).tolist() == [2, 3]
    assert primes_up_to(100).tolist() == list(primerange(2, 101))


def test_primes_up_to_counts_primes_below_ten_to_the_five():
    assert len(primes_up_to(10**5)) == 9592


def test_primes_up_to_across_many_segments(monkeypatch):
    monkeypatch.setattr(primes_module, "SEGMENT_ODD_COUNT", 37)
    assert primes_up_to(5000).tolist() == list(primerange(2, 5001))


def test_primes_up_to_is_independent_of_workers(monkeypatch):
    monkeypatch.setattr(primes_module, "SEGMENT_ODD_COUNT", 1000)
    single = primes_up_to(50_000, workers=1)
    threaded = primes_up_to(50_000, workers=4)
    assert np.array_equal(single, threaded)


def test_primes_up_to_rejects_limits_beyond_the_cap():
    with pytest.raises(ValueError):
        primes_up_to(primes_module.PRIME_CAP + 1)


def test_kronecker_table_matches_symbol():
    table = kronecker_table(-20)
    assert [int(v) for v in table] == [kronecker(-20, r) if r else 0 for r in range(20)]


def test_nonprincipal_split_residues_match_known_tables(field_m5, field_m15):
    m5 = principal_residue_table(field_m5)
    split_m5 = np.flatnonzero(kronecker_table(-20) == 1).tolist()
    assert sorted(r for r in split_m5 if not m5[r]) == [3, 7]

    m15 = principal_residue_table(field_m15)
    split_m15 = np.flatnonzero(kronecker_table(-15) == 1).tolist()
    assert sorted(r for r in split_m15 if not m15[r]) == [2, 8]


def test_derived_residue_table_agrees_with_known_one(monkeypatch, field_m5):
    monkeypatch.setattr(primes_module, "KNOWN_NONPRINCIPAL_SPLIT", {})
    principal_residue_table.cache_clear()
    try:
        derived = principal_residue_table(field_m5)
        assert sorted(np.flatnonzero(~derived & (kronecker_table(-20) == 1)).tolist()) == [3, 7]
    finally:
        principal_residue_table.cache_clear()


@pytest.mark.parametrize("d", [-5, -15, -6, -10])
def test_principality_agrees_with_the_norm_form(d):
    field = make_field(d)
    for record in prime_ideals_up_to(field, 10**4):
        if record.splitting is Splitting.INERT:
            assert record.principal
        else:
            assert record.principal == field.principal_form_represents(record.p), record


def test_is_principal_for_class_number_one(field_m1):
    record = PrimeIdealRecord(p=5, splitting=Splitting.SPLIT, norm=5, ideals_above=2)
    assert is_principal(field_m1, record)


def test_is_principal_rejects_large_class_numbers():
    field = make_field(-23)
    record = PrimeIdealRecord(p=2, splitting=Splitting.SPLIT, norm=2, ideals_above=2)
    with pytest.raises(UnsupportedFieldError):
        is_principal(field, record)


def test_prime_ideals_up_to_ten_for_m5(field_m5):
    records = prime_ideals_up_to(field_m5, 10)
    assert [r.norm for r in records] == [2, 3, 5, 7]
    assert [r.ideals_above for r in records] == [1, 2, 1, 2]
    assert [r.principal for r in records] == [False, False, True, False]


def test_prime_ideals_are_ordered_by_norm_with_inert_squares(field_m1):
    records = prime_ideals_up_to(field_m1, 10)
    assert [(r.p, r.norm) for r in records] == [(2, 2), (5, 5), (3, 9)]
    assert records[2].splitting is Splitting.INERT


def test_prime_ideals_leave_principality_open_above_class_number_two():
    records = prime_ideals_up_to(make_field(-23), 50)
    assert records
    assert all(r.principal is None for r in records)


def test_prime_ideals_below_two_are_empty(field_m5):
    assert prime_ideals_up_to(field_m5, 1.5) == []


def test_prime_arrays_masks_partition_the_primes(field_m15):
    arrays = prime_arrays(field_m15, 1000)
    total = arrays.split.sum() + arrays.inert.sum() + arrays.ramified.sum()
    assert total == len(arrays.primes)
    assert arrays.primes[arrays.ramified].tolist() == [3, 5]


def test_record_to_dict(field_m5):
    record = prime_ideals_up_to(field_m5, 3)[-1]
    assert record.to_dict() == {
        "p": 3,
        "splitting": "split",
        "norm": 3,
        "ideals_above": 2,
        "principal": False,
    }
