from grpbounds.claims import CLAIMS, ClaimResult, evaluate_record, run_claims


def test_claim_table_shape():
    ids = [c[0] for c in CLAIMS]
    assert ids == ["C%d" % i for i in range(1, 9)]
    assert len({c[1] for c in CLAIMS}) == 8  # descriptions are distinct


def test_evaluate_record_solvable(main_records):
    rec = next(r for r in main_records if r.id == "16.7")
    row = evaluate_record(rec)
    assert row == {"id": "16.7", "order": 16, "class": 3, "nilpotent": True,
                   "exp": 8, "ge": 2, "r": 4, "rprime": 2,
                   "r_gt_ge": True, "rprime_gt_ge": False}


def test_evaluate_record_non_nilpotent(main_records):
    rec = next(r for r in main_records if r.id == "6.1")
    row = evaluate_record(rec)
    assert row["class"] is None
    assert row["nilpotent"] is False
    assert row["r"] == 6 and row["ge"] == 2
    assert row["r_gt_ge"] is True


def test_evaluate_record_nonsolvable(main_records):
    rec = next(r for r in main_records if r.id == "60.5")
    row = evaluate_record(rec)
    assert row["r"] is None and row["rprime"] is None
    assert row["r_gt_ge"] is False and row["rprime_gt_ge"] is False
    assert row["exp"] == 30 and row["ge"] == 2


def test_run_claims_reports_missing_records(main_records):
    few = [r for r in main_records if r.order <= 20]
    results = run_claims(few)
    assert len(results) == 8
    by_id = {res.claim: res for res in results}
    assert not by_id["C5"].ok
    assert "missing record" in by_id["C5"].computed
    assert not by_id["C2"].ok
    for res in results:
        assert isinstance(res, ClaimResult)
        assert res.seconds >= 0
        assert res.description


def test_claim_results_independent_of_record_order(main_records):
    small = [r for r in main_records if r.order <= 16]
    a = run_claims(small)
    b = run_claims(list(reversed(small)))
    assert [(r.claim, r.ok, r.computed) for r in a] == \
        [(r.claim, r.ok, r.computed) for r in b]
