import json

import pytest

import sylloprobe as sp


def test_oracle_and_catalog():
    assert sp.classify_mood(1, "AAA") == "entailment"
    assert sp.classify_mood(1, "AAE") == "contradiction"
    assert sp.classify_mood(1, "AAE", semantics="modern") == "neutral"
    assert sp.classify_bruteforce(1, "AIA") == sp.classify_mood(1, "AIA")
    cat = sp.catalog()
    assert cat["version"] == sp.CATALOG_VERSION
    assert len(cat["patterns"]) == 36
    assert [p["label"] for p in cat["patterns"]].count("neutral") == 12
    assert len(sp.list_valid_moods([1, 2, 3], "modern")) == 12
    with pytest.raises(ValueError):
        sp.classify_mood(5, "AAA")


def test_surface_round_trip():
    premise, hypothesis = sp.realize("BARBARA", "Element collectors", "Gabonese", "Budget analysts")
    assert premise == "All Gabonese are Budget analysts, and all Element collectors are Gabonese."
    assert hypothesis == "All Element collectors are Budget analysts."
    parsed = sp.parse(premise, hypothesis)
    assert parsed == {"figure": 1, "mood": "AAA", "subject": "Element collectors",
                      "middle": "Gabonese", "predicate": "Budget analysts"}
    assert sp.label(premise, hypothesis) == "entailment"
    with pytest.raises(sp.UnparsableStatement):
        sp.parse("It has rained.", hypothesis)
    assert sp.features("AAE")["symmetric_negation"] is False


def test_pipeline(tmp_path):
    manifest = sp.generate(tmp_path / "out", select=2, shuffle_seed=1, jobs=2)
    assert manifest["sample_count"] == 36 * 8
    dataset = tmp_path / "out" / "dataset.jsonl"
    assert sp.validate(dataset)["ok"] is True

    summary = sp.simulate(dataset, tmp_path / "h.jsonl")
    assert summary["by_gold"]["neutral"]["predicted"]["neutral"]["count"] == 0
    report = sp.evaluate(dataset, tmp_path / "h.jsonl")
    assert report["per_label_accuracy"]["neutral"] == 0.0
    assert report["source"] == "heuristic"
    assert "## Accuracy per gold label" in sp.render(dataset, tmp_path / "h.jsonl")


def test_model_predictions_with_scores(tmp_path):
    sp.generate(tmp_path, select=1)
    dataset = tmp_path / "dataset.jsonl"
    rows = [json.loads(line) for line in dataset.read_text().splitlines()]
    with open(tmp_path / "m.jsonl", "w") as f:
        for i, row in enumerate(rows):
            scores = [0.1, 0.1, 0.1]
            scores[sp.LABELS.index(row["label"])] = 0.8
            rec = {"id": row["id"], "label": row["label"], "source": "some-model"}
            rec["scores"] = scores if i % 2 else dict(zip(sp.LABELS, scores))
            f.write(json.dumps(rec) + "\n")
    report = sp.evaluate(dataset, tmp_path / "m.jsonl")
    assert report["overall_accuracy"] == 100.0
    assert report["source"] == "some-model"


def test_errors(tmp_path):
    sp.generate(tmp_path, select=1)
    dataset = tmp_path / "dataset.jsonl"
    (tmp_path / "p.jsonl").write_text('{"id":"nope","label":"neutral"}\n')
    with pytest.raises(sp.EmptyIntersection):
        sp.evaluate(dataset, tmp_path / "p.jsonl")
    (tmp_path / "p.jsonl").write_text('{"id":"a","label":"neutral"}\n{"id":"a","label":"neutral"}\n')
    with pytest.raises(sp.DuplicatePredictionId):
        sp.evaluate(dataset, tmp_path / "p.jsonl")
    with pytest.raises(sp.SchemaError):
        sp.evaluate(dataset, tmp_path / "p.jsonl")
    with pytest.raises(OSError):
        sp.validate(tmp_path / "missing.jsonl")
    with pytest.raises(sp.LexiconTooSmall):
        sp.generate(tmp_path / "x", select=16)
