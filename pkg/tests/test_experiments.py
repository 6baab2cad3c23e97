import numpy as np
import pytest

from featurehash.experiments import (
    CSV_FIELDS,
    ExperimentConfig,
    Method,
    ResultRow,
    encode_counts,
    encode_matrix,
    format_rows,
    run_sms,
    run_synthetic,
    run_wili,
)
from featurehash.textseg import TokenizerSpec
from fixtures import write_sms, write_wili


def values(rows, **match):
    return [r.value for r in rows if all(getattr(r, k) == v for k, v in match.items())]


@pytest.fixture(scope="module")
def small_synthetic():
    return run_synthetic(ExperimentConfig(dim_exponents=(7, 10), trials=20, p_grid=(0.0, 0.5, 1.0)))


def test_synthetic_shape(small_synthetic):
    assert len(small_synthetic) == 2 * 2 * 3
    assert values(small_synthetic, p=0.0) == [1.0] * 4
    for method in ("ah", "ht"):
        assert abs(values(small_synthetic, method=method, L=1024, p=1.0)[0]) <= 0.1


def test_synthetic_methods_agree(small_synthetic):
    for L in (128, 1024):
        for p in (0.0, 0.5, 1.0):
            (ah,) = values(small_synthetic, method="ah", L=L, p=p)
            (ht,) = values(small_synthetic, method="ht", L=L, p=p)
            assert abs(ah - ht) <= 0.1


def test_rows_sorted(small_synthetic):
    assert small_synthetic == sorted(small_synthetic, key=ResultRow.sort_key)


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(dim_exponents=(2,))
    ExperimentConfig(methods=("ht",), dim_exponents=(2,))
    with pytest.raises(ValueError):
        ExperimentConfig(ngram=0)
    with pytest.raises(ValueError):
        ExperimentConfig(methods=("nope",))
    with pytest.raises(ValueError):
        ExperimentConfig(trials=0)


def test_row_rejects_nan():
    with pytest.raises(ValueError):
        ResultRow("sms", "ah", 3, 16, None, "sc", float("nan"), 1, 0)


def test_encode_matrix_rows_are_unit():
    m = encode_matrix(["hello world", "", "abc"], TokenizerSpec(n=3), Method.AH, 64)
    np.testing.assert_allclose(np.linalg.norm(m, axis=1), [1.0, 0.0, 1.0], atol=1e-12)


def test_encode_counts_methods():
    toks = ["abc", "bcd", "abc"]
    assert encode_counts(toks, "ht-unsigned", 16).sum() == 3
    assert set(np.abs(encode_counts(["abc"], "ah", 16)).tolist()) == {1}


def test_format_csv_and_json(small_synthetic):
    csv_text = format_rows(small_synthetic[:2], "csv")
    lines = csv_text.splitlines()
    assert lines[0] == ",".join(CSV_FIELDS)
    assert lines[1] == "synthetic,ah,3,128,0.0,similarity,1.0,20,0"
    json_text = format_rows(small_synthetic[:2], "json")
    assert json_text.count("\n") == 2 and '"experiment": "synthetic"' in json_text


def test_sms_pipeline(tmp_path):
    path = write_sms(tmp_path / "sms.txt")
    rows = run_sms(ExperimentConfig(data=path, dim_exponents=(4, 10), trials=3))
    assert {r.metric for r in rows} == {"acc", "sc", "bh"}
    for method in ("ah", "ht"):
        assert values(rows, method=method, L=1024, metric="acc")[0] >= 0.95
        assert values(rows, method=method, L=1024, metric="sc")[0] >= 0.8
    assert all(r.trials == 3 and r.p is None for r in rows)


def test_wili_pipeline(tmp_path):
    root = write_wili(tmp_path / "wili")
    rows = run_wili(ExperimentConfig(data=root, dim_exponents=(3, 9), languages=3, per_class=10))
    for method in ("ah", "ht"):
        assert values(rows, method=method, L=512)[0] >= 0.95
        assert values(rows, method=method, L=512)[0] >= values(rows, method=method, L=8)[0]


def test_missing_data_path():
    with pytest.raises(ValueError):
        run_sms(ExperimentConfig())
    with pytest.raises(ValueError):
        run_wili(ExperimentConfig())
