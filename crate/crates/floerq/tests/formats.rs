use floerq::formats::{
    coefficients_from_arg, parse_json, ring_from_arg, spectrum_from_arg, FlowCategoryJson, FlowCountJson,
    FlowGeneratorJson, ScenarioJson,
};
use floerq_core::flow::{Coefficients, RingSpectrum};
use floerq_core::ring::graded_dimension;
use proptest::prelude::*;

#[test]
fn shorthands() {
    assert_eq!(graded_dimension(&ring_from_arg("rp:5").unwrap(), 3), 1);
    assert_eq!(graded_dimension(&ring_from_arg("cp:3").unwrap(), 3), 0);
    assert_eq!(graded_dimension(&ring_from_arg("poly:2").unwrap(), 2), 3);
    assert!(ring_from_arg("rp:x").is_err());
    assert!(ring_from_arg("torus:2").is_err());
    assert_eq!(coefficients_from_arg("fp:5").unwrap(), Coefficients::Fp(5));
    assert!(coefficients_from_arg("fp:4").is_err());
    assert_eq!(spectrum_from_arg("tauMU:2").unwrap(), RingSpectrum::TauMU(2));
    assert!(spectrum_from_arg("tauMU:-1").is_err());
}

#[test]
fn spec_scenario_example_parses() {
    let text = r#"{"n":7, "N_mu":8, "target":"oh-rpn", "components":[{"name":"pt","betti":[1],"twist":3},{"name":"C","betti":[1,1,1,1,1,1,1],"twist":0}]}"#;
    let doc: ScenarioJson = parse_json(text, "inline").unwrap();
    assert_eq!(doc.schema, 1);
    let s = doc.to_scenario().unwrap();
    assert_eq!(s.target(), &[1; 8]);
    let ring = r#"{"generators":[{"name":"x","degree":1,"truncation":8}]}"#;
    let ring: floerq::formats::RingJson = parse_json(ring, "inline").unwrap();
    assert_eq!(graded_dimension(&ring.to_presentation().unwrap(), 7), 1);
}

#[test]
fn unknown_fields_are_rejected() {
    let text = r#"{"N":4, "generators":[], "extra": 1}"#;
    assert!(parse_json::<FlowCategoryJson>(text, "inline").is_err());
}

fn flow_doc() -> impl Strategy<Value = FlowCategoryJson> {
    (3i64..9, 1usize..6).prop_flat_map(|(n, k)| {
        let gens = prop::collection::vec((-3i64..3, -10i64..10), k);
        let counts = prop::collection::vec((0..k, 0..k, -3i64..4), 0..8);
        (Just(n), gens, counts).prop_map(|(n, gens, counts)| {
            let generators: Vec<FlowGeneratorJson> = gens
                .iter()
                .enumerate()
                .map(|(j, &(mu, r))| FlowGeneratorJson { id: format!("g{j}"), mu, rank: r * 10 + j as i64 })
                .collect();
            let mut seen = std::collections::BTreeSet::new();
            let counts = counts
                .into_iter()
                .filter(|&(a, b, c)| a != b && c != 0 && seen.insert((a, b)))
                .map(|(a, b, count)| FlowCountJson { from: format!("g{a}"), to: format!("g{b}"), count })
                .collect();
            FlowCategoryJson { schema: 1, truncation: n, generators, counts }
        })
    })
}

proptest! {
    #[test]
    fn flow_documents_round_trip(doc in flow_doc()) {
        let spec = doc.to_spec().unwrap();
        let back = FlowCategoryJson::from_spec(&spec);
        let text = serde_json::to_string(&back).unwrap();
        let reparsed: FlowCategoryJson = parse_json(&text, "inline").unwrap();
        prop_assert_eq!(&reparsed, &back);
        prop_assert_eq!(reparsed.to_spec().unwrap(), spec);
    }
}
