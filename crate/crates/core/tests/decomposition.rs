use tetra_core::combinatorial::Family;
use tetra_core::decomposition::{load_proof_script, verify_theorem, LabeledFactors, ReflectionLibrary, SemanticCheck};

#[test]
fn shipped_script_passes() {
    let script = load_proof_script().unwrap();
    let factors = LabeledFactors::f4().unwrap();
    let lib = ReflectionLibrary::build().unwrap();
    let report = verify_theorem(&script, &factors, &lib, &SemanticCheck::default()).unwrap();
    assert!(report.passed, "{:?}", report.failure);
    assert_eq!(report.stages_validated, 24);
    assert_eq!(report.commutation_steps_validated, 25);
    assert_eq!((report.c3_count, report.b3_count), (12, 12));
    assert!(report.final_is_reverse);
}

#[test]
fn corrupted_label_fails_at_its_stage() {
    let factors = LabeledFactors::f4().unwrap();
    let lib = ReflectionLibrary::build().unwrap();
    let semantic = SemanticCheck {
        states: 0,
        ..Default::default()
    };
    for stage in [0, 7, 23] {
        let mut script = load_proof_script().unwrap();
        let w = script.stages[stage].window[0] - 1;
        script.stages[stage].y.swap(w, w + 1);
        let report = verify_theorem(&script, &factors, &lib, &semantic).unwrap();
        assert!(!report.passed);
        assert_eq!(report.failure.unwrap().stage, stage);
    }
}

#[test]
fn wrong_family_is_reported() {
    let factors = LabeledFactors::f4().unwrap();
    let lib = ReflectionLibrary::build().unwrap();
    let mut script = load_proof_script().unwrap();
    script.stages[2].family = match script.stages[2].family {
        Family::B3 => Family::C3,
        Family::C3 => Family::B3,
    };
    let report = verify_theorem(
        &script,
        &factors,
        &lib,
        &SemanticCheck {
            states: 0,
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(report.failure.unwrap().stage, 2);
}
