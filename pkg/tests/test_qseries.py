import numpy as np
import pytest

from padic_hyper.errors import BeyondCache, CorruptCache, IntegerOverflow, NonIntegralPrefactor, VersionMismatch
from padic_hyper.qseries import (
    F1_FACTORS,
    ModularForms,
    QSeries,
    cache_file,
    cache_load,
    cache_store,
    cached_expansion,
    eta_like_product,
    eta_prefactor,
    euler_product,
    expand_f1,
    expand_g,
    expand_g_part,
    g_factors,
    hecke_relation_holds,
    twist_m4,
    weil_bound_holds,
    weil_certifies,
)

PARTITIONS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_euler_product_is_pentagonal():
    assert euler_product(1, 10).tolist() == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0]
    assert euler_product(2, 6).tolist() == [1, 0, -1, 0, -1, 0, 0]


def test_inverse_gives_partition_numbers():
    assert euler_product(1, 10).inverse().tolist() == PARTITIONS
    assert (euler_product(1, 10) ** -1).tolist() == PARTITIONS


def test_series_arithmetic():
    a = QSeries.from_coeffs([1, 2, 3])
    b = QSeries.from_coeffs([0, 1], nmax=2)
    assert (a + b).tolist() == [1, 3, 3]
    assert (a * b).tolist() == [0, 1, 2]
    assert a.shift(1).tolist() == [0, 1, 2]
    assert a.scale(-2).tolist() == [-2, -4, -6]
    assert a.truncate(1) == QSeries.from_coeffs([1, 2])
    with pytest.raises(BeyondCache):
        a[3]
    with pytest.raises(BeyondCache):
        a.truncate(5)


def test_overflow_is_detected():
    big = QSeries.from_coeffs([2**62, 2**62])
    with pytest.raises(IntegerOverflow):
        big.scale(4)
    with pytest.raises(IntegerOverflow):
        big * big
    with pytest.raises(IntegerOverflow):
        QSeries.from_coeffs([2**63])


def test_prefactor_must_match():
    assert eta_prefactor(F1_FACTORS) == 1
    with pytest.raises(NonIntegralPrefactor):
        eta_like_product([(1, 1)], 0, 10)
    with pytest.raises(NonIntegralPrefactor):
        eta_like_product(F1_FACTORS, 2, 10)


@pytest.mark.parametrize("i", [1, 2, 3, 4, 5])
def test_sparse_and_pentagonal_agree(i):
    nmax = 80
    assert eta_like_product(g_factors(i), i, nmax, "sparse") == eta_like_product(g_factors(i), i, nmax, "pentagonal")


def test_f1_coefficients():
    a = expand_f1(20)
    assert [a[n] for n in (1, 3, 5, 7)] == [1, -4, -2, 24]
    assert all(a[n] == 0 for n in range(0, 21, 2))
    assert a == expand_f1(20, "sparse")


def test_g_coefficients():
    assert expand_g_part(1, 5)[2] == -4
    g = expand_g(10)
    assert g[0] == 0
    assert g[1] == 1
    assert g[2] == 1


def test_twist():
    c = twist_m4(expand_f1(10))
    assert c[3] == 4
    assert c[5] == -2
    assert c[1] == 1


def test_modular_forms_bundle():
    forms = ModularForms.build(60)
    assert forms.coeff_a(3) == -4
    assert forms.coeff_c(3) == 4
    assert forms.coeff_b(2) == 1
    assert forms.series("f2") == forms.c
    with pytest.raises(BeyondCache):
        forms.coeff_a(61)
    with pytest.raises(ValueError):
        forms.series("h")


def test_weil_and_hecke():
    a = expand_f1(130)
    for p in (3, 5, 7, 11):
        assert weil_bound_holds(a[p], p)
        assert hecke_relation_holds(a, p)
    assert weil_certifies(3, 3)
    assert not weil_certifies(3, 2)


def test_cache_file_format(tmp_path):
    path = cache_store(cache_file(tmp_path, "f1"), "f1", expand_f1(3))
    assert path.name == "f1.qseries"
    lines = path.read_text(encoding="ascii").splitlines()
    assert lines[0] == "#qseries v1 label=f1 nmax=3"
    assert lines[1:5] == ["0\t0", "1\t1", "2\t0", "3\t-4"]
    assert lines[5].startswith("#end crc32=")
    assert cache_load(path, "f1") == expand_f1(3)
    assert not path.with_suffix(".qseries.tmp").exists()


def test_cache_detects_tampering(tmp_path):
    path = cache_store(tmp_path / "f1.qseries", "f1", expand_f1(5))
    path.write_text(path.read_text().replace("3\t-4", "3\t-5"))
    with pytest.raises(CorruptCache):
        cache_load(path, "f1")


def test_cache_detects_truncation_and_label(tmp_path):
    path = cache_store(tmp_path / "f1.qseries", "f1", expand_f1(5))
    with pytest.raises(CorruptCache):
        cache_load(path, "g")
    path.write_text("\n".join(path.read_text().splitlines()[:-1]) + "\n")
    with pytest.raises(CorruptCache):
        cache_load(path, "f1")


def test_cache_version_mismatch(tmp_path):
    path = cache_store(tmp_path / "f1.qseries", "f1", expand_f1(5))
    path.write_text(path.read_text().replace("#qseries v1", "#qseries v2"))
    with pytest.raises(VersionMismatch):
        cache_load(path, "f1")


def test_cached_expansion_reuses_longer_file(tmp_path):
    long = cached_expansion("f1", 40, tmp_path)
    assert cache_file(tmp_path, "f1").exists()
    assert cached_expansion("f1", 20, tmp_path) == long.truncate(20)


def test_corrupt_cache_is_rebuilt(tmp_path):
    path = cache_file(tmp_path, "g")
    path.write_text("garbage\n")
    series = cached_expansion("g", 10, tmp_path)
    assert series == expand_g(10)
    assert cache_load(path, "g") == series


def test_frozen_coefficients():
    series = expand_f1(5)
    with pytest.raises(ValueError):
        series.coeffs[0] = 1
    assert isinstance(series.coeffs, np.ndarray)
