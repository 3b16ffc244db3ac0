from grpcensus import constructions
from grpcensus.corpus import parse_manifest
from grpcensus.verify import CHECKS, Context, run_checks


def small_context():
    return Context(parse_manifest("C(5)\nC(6)\nD(10)\nQ(8)\nC(30)\nD(30)\nE(2,3)\n"), max_enum=10)


def test_check_names_unique():
    names = [name for name, _, _ in CHECKS]
    assert len(names) == len(set(names))


def test_selected_checks_on_small_context():
    ctx = small_context()
    results = run_checks(ctx, only={"totient-identities", "classification-with-c5",
                                    "classification-family-scan", "three-prime-bound"})
    by_name = {r.name: r for r in results}
    assert by_name["totient-identities"].passed
    assert by_name["classification-with-c5"].passed
    assert by_name["three-prime-bound"].passed
    assert not by_name["classification-family-scan"].passed
    assert "C(5)" in by_name["classification-family-scan"].detail


def test_exceptions_become_failures(monkeypatch):
    def broken(_):
        raise RuntimeError("boom")

    monkeypatch.setattr(constructions, "dicyclic", broken)
    (res,) = run_checks(small_context(), only={"two-group-counts"})
    assert not res.passed and "RuntimeError: boom" in res.detail
