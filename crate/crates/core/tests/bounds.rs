use milnor_core::bounds::{
    cat_bounds, render_table, report, tc_bounds, to_csv, to_json, BoundInterval, BoundOptions,
    BoundReport, Rule, RuleSet, CONVENTION_BANNER, CSV_HEADER,
};
use milnor_core::catalog::{Group, ParamBits, SpaceDescriptor};
use milnor_core::invariants::SearchOptions;

fn desc(s: &str) -> SpaceDescriptor {
    s.parse().unwrap()
}

fn tiny_budget() -> BoundOptions {
    BoundOptions {
        search: SearchOptions {
            tensor_budget: 100,
            ..SearchOptions::default()
        },
        ..BoundOptions::default()
    }
}

/// Spaces, optional group actions and option sets that together exercise
/// every rule. The budget-limited cases are where the formula lower bounds
/// are not dominated by a computed zero-divisor cup-length.
type Case = (&'static str, Option<(Group, &'static str)>, BoundOptions);

fn regression_suite() -> Vec<Case> {
    let d = BoundOptions::default;
    vec![
        ("milnor-real:1,1", None, d()),
        ("milnor-real:2,1", None, d()),
        ("milnor-real:3,3", None, d()),
        ("milnor-real:4,3", None, d()),
        ("milnor-real:5,3", None, d()),
        ("milnor-complex:3,2", None, d()),
        ("rp:2", None, d()),
        ("rp:3", None, d()),
        ("rp:5", None, d()),
        ("pps:2,3", None, d()),
        ("gpps-cs:5,3;2,3", None, d()),
        ("gpps-tensor:5,3;pps:2,3", None, d()),
        ("gpps-refl:real,5,3;(3,2)@0010000", None, d()),
        ("gpps-refl:complex,5,3;(3,2)@0010000", None, d()),
        ("milnor-real:5,3", Some((Group::Z2, "")), d()),
        ("milnor-real:5,3", Some((Group::S1, "")), d()),
        ("milnor-real:4,3", None, tiny_budget()),
        ("milnor-real:5,3", Some((Group::Z2, "")), tiny_budget()),
        ("gpps-refl:real,5,3;(3,2)", None, tiny_budget()),
    ]
}

type Signature = Vec<(u64, Option<u64>)>;

fn signature(r: &BoundReport) -> Signature {
    let mut out = vec![iv(&r.cat), iv(&r.tc)];
    if let Some(eq) = &r.equivariant {
        out.push(iv(&eq.cat_g));
        out.push(iv(&eq.tc_g));
    }
    out
}

fn iv(i: &BoundInterval) -> (u64, Option<u64>) {
    (i.lower, i.upper)
}

fn run(space: &str, group: Option<(Group, &str)>, opts: &BoundOptions) -> BoundReport {
    let group = group.map(|(g, p)| (g, ParamBits::parse(p).unwrap()));
    report(&desc(space), group, opts).unwrap()
}

#[test]
fn removing_any_rule_changes_some_interval() {
    let suite = regression_suite();
    let baseline: Vec<Signature> = suite
        .iter()
        .map(|(s, g, o)| signature(&run(s, *g, o)))
        .collect();
    let mut dead = Vec::new();
    for rule in Rule::ALL {
        let changed = suite.iter().zip(&baseline).any(|((s, g, o), base)| {
            let opts = BoundOptions {
                rules: RuleSet::all().without(rule),
                ..o.clone()
            };
            signature(&run(s, *g, &opts)) != *base
        });
        if !changed {
            dead.push(rule);
        }
    }
    assert!(
        dead.is_empty(),
        "rules with no effect on the suite: {dead:?}"
    );
}

#[test]
fn every_interval_is_consistent() {
    let mut spaces: Vec<String> = Vec::new();
    for r in 1..=6 {
        for s in 1..=r {
            spaces.push(format!("milnor-real:{r},{s}"));
            spaces.push(format!("milnor-complex:{r},{s}"));
        }
    }
    spaces.extend(["rp:1", "rp:4", "rp:6", "cp:3", "pps:2,3", "pps:3,4,5"].map(String::from));
    for s in &spaces {
        let r = run(s, None, &BoundOptions::default());
        assert!(r.cat.is_consistent(), "{s}: cat {}", r.cat);
        assert!(r.tc.is_consistent(), "{s}: tc {}", r.tc);
    }
    for params in ["", "0010000", "0100000", "1111111"] {
        let r = run(
            "milnor-real:5,3",
            Some((Group::Z2, params)),
            &BoundOptions::default(),
        );
        let eq = r.equivariant.unwrap();
        assert!(
            eq.cat_g.is_consistent() && eq.tc_g.is_consistent(),
            "@{params}"
        );
    }
}

#[test]
fn exhaustive_oracle_never_lowers_a_bound() {
    let with = BoundOptions {
        exhaustive: true,
        ..BoundOptions::default()
    };
    for s in [
        "milnor-real:1,1",
        "milnor-real:2,1",
        "milnor-real:2,2",
        "milnor-real:3,2",
        "milnor-complex:2,1",
        "rp:2",
        "rp:3",
        "cp:2",
        "pps:2,3",
    ] {
        let plain = run(s, None, &BoundOptions::default());
        let full = run(s, None, &with);
        assert!(full.zcl_exhaustive.is_some(), "{s}: oracle refused");
        assert!(full.cat.lower >= plain.cat.lower, "{s}");
        assert!(full.tc.lower >= plain.tc.lower, "{s}");
        let basic = plain.zcl_basic.unwrap().value;
        assert!(full.zcl_exhaustive.unwrap().value >= basic, "{s}");
    }
}

#[test]
fn milnor_category_is_exact() {
    let opts = BoundOptions::default();
    for r in 1..=8u64 {
        for s in 1..=r {
            for family in ["milnor-real", "milnor-complex"] {
                let d = desc(&format!("{family}:{r},{s}"));
                assert_eq!(cat_bounds(&d, &opts).unwrap().point(), Some(r + s), "{d}");
            }
        }
    }
}

#[test]
fn corollary_values() {
    let opts = BoundOptions::default();
    for (r, expected) in [(4, 11), (8, 19)] {
        let tc = tc_bounds(&desc(&format!("milnor-real:{r},3")), &opts).unwrap();
        assert_eq!(tc.point(), Some(expected));
    }
}

#[test]
fn tc_rp_overrides_reach_the_product_rule() {
    use milnor_core::bounds::TcRpEntry;
    let space = desc("milnor-real:5,3");
    let base = tc_bounds(&space, &BoundOptions::default()).unwrap();
    let mut opts = BoundOptions::default();
    opts.tc_rp
        .insert(
            5,
            TcRpEntry {
                value: 6,
                citation: "test value".into(),
            },
        )
        .unwrap();
    let tc = tc_bounds(&space, &opts).unwrap();
    // TC(RP^5) + TC(RP^3) - 1 = 6 + 4 - 1.
    assert_eq!(tc.upper, Some(9));
    assert!(base.upper.unwrap() > 9);
    let r7 = tc.provenance.iter().find(|p| p.rule == Rule::R7).unwrap();
    assert!(r7.citation.contains("test value") || r7.inputs.contains("test value"));
}

#[test]
fn serialization_is_deterministic() {
    let opts = BoundOptions::default();
    let a = run("milnor-real:5,3", Some((Group::Z2, "")), &opts);
    let b = run("milnor-real:5,3", Some((Group::Z2, "")), &opts);
    assert_eq!(to_json(&a).unwrap(), to_json(&b).unwrap());
    let csv = to_csv(&[a.clone(), b]).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER.join(",").as_str()));
    assert_eq!(lines.next(), lines.next());
    let table = render_table(&a);
    assert!(table.starts_with(CONVENTION_BANNER));
}

#[test]
fn unknown_upper_bound_serializes_as_text() {
    let r = run(
        "milnor-real:5,3",
        Some((Group::Z2, "")),
        &BoundOptions::default(),
    );
    let json: serde_json::Value = serde_json::from_str(&to_json(&r).unwrap()).unwrap();
    assert_eq!(json["equivariant"]["tc_g"]["upper"], "unknown");
    assert_eq!(json["tc"]["lower"], r.tc.lower);
}
