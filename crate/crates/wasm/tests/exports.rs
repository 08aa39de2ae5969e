use natred_wasm::{classify_json, region_json, surface_values};

#[test]
fn region_cells_are_row_major() {
    let json = region_json((0.1, 0.2), (0.1, 0.2), 3, false).unwrap();
    let cells: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    assert_eq!(cells.len(), 9);
    assert_eq!(cells[1]["t1"], 0.1);
    assert!((cells[1]["t2"].as_f64().unwrap() - 0.15).abs() < 1e-15);
    assert!(cells.iter().all(|c| c["solver"].is_null()));
    assert_eq!(cells[8]["sufficient"], true);
}

#[test]
fn surface_marks_infeasible_points() {
    let values = surface_values((2.0 / 15.0, 2.0 / 15.0), (0.5, 1.0), (0.5, 1.0), 2).unwrap();
    assert!(values[0].is_nan());
    assert!((values[3] - 427.0 / 900.0).abs() < 1e-12);
}

#[test]
fn classification_of_examples() {
    let ex1: serde_json::Value = serde_json::from_str(&classify_json(1.0 / 6.0, 1.0 / 6.0).unwrap()).unwrap();
    assert_eq!(ex1["outcome"]["status"], "SolutionFound");
    let ex2: serde_json::Value = serde_json::from_str(&classify_json(0.1, 0.1).unwrap()).unwrap();
    assert_eq!(ex2["outcome"]["status"], "CertifiedNoSolution");
    assert!(classify_json(-1.0, 0.1).is_err());
}
