use gitquot::report::ReportJson;
use gitquot_cli::{quotient_json, to_json, Overrides, ProblemFile};
use proptest::prelude::*;

fn problem() -> impl Strategy<Value = ProblemFile> {
    (1usize..=3, 1usize..=2)
        .prop_flat_map(|(n, r)| {
            (
                prop::collection::vec(prop::collection::vec(1i64..=3, n), r),
                prop::collection::vec(0i64..=4, r),
                any::<bool>(),
            )
        })
        .prop_map(|(rows, alpha, lattice)| {
            let n = rows[0].len();
            let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let text = serde_json::json!({
                "variables": names,
                "action_rows": rows,
                "alpha": alpha,
                "mode": if lattice { "lattice" } else { "polynomial" },
                "degree_bound": 4,
            });
            ProblemFile::parse(&text.to_string(), "generated").unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn emitted_reports_round_trip(p in problem()) {
        // Pipeline errors (unbounded slices, non-integral lattices) are fine here.
        if let Ok(text) = quotient_json(&p, &Overrides::default()) {
            let back: ReportJson = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(to_json(&back), text);
        }
    }
}
