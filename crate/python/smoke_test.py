"""Smoke test for the keyvariety extension module."""

import json

import keyvariety as kv


def main():
    assert "g8_sigma_bar" in kv.cases()

    g25 = kv.Variety("grass_2_5")
    assert g25.count_points(2) == kv.gaussian_binomial(5, 2, 2) == 155
    assert g25.count_points(3) == 1210

    g8 = kv.Variety("g8_sigma_bar")
    dim, counts = g8.estimate_dimension([2, 3])
    assert dim == 5, (dim, counts)

    points, singular, matches = kv.Variety("g5_sigma_bar").singular_scan(2)
    assert matches is True and 0 < singular < points

    count, shape = kv.fiber("g8_sigma_bar", 2, "1:0:0:0:0:0:0:0:0:0:0:0")
    assert count >= 1, shape

    w = g8.seeded_cut(2, 12, 3, ["pi"])
    assert w.expected_dim == 3 and ("pi", True) in w.planes

    try:
        g8.cut(["not_a_var"])
    except kv.KeyvarietyError:
        pass
    else:
        raise AssertionError("unknown variable accepted")

    assert all(kv.verify_ledger().values())

    report = json.loads(kv.run("cases=grass_2_5\nprimes=2\nchecks=count\n"))
    assert report["summary"]["fail"] == 0 and report["records"][0]["verdict"] == "pass"
    print("smoke test ok:", repr(g8), len(report["records"]), "record(s)")


if __name__ == "__main__":
    main()
