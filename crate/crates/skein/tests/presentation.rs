use wt_laurent::{quantum_int, LaurentPoly};
use wt_skein::presentation_check;

#[test]
fn one_one_relations() {
    let rep = presentation_check(1, 1, 2);
    let names: Vec<_> = rep.relations.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names, ["(vii)"]);
    let vii = &rep.relations[0];
    assert!(vii.passed);
    let (c, coeff) = vii.lhs.terms().next().unwrap();
    assert!(!c.is_totally_propagating());
    assert_eq!(*coeff, quantum_int(2));
}

#[test]
fn two_one_gives_lambda_inverse() {
    let rep = presentation_check(2, 1, 3);
    let vi = rep.relations.iter().find(|r| r.name == "(vi)").unwrap();
    assert!(vi.passed);
    assert_eq!(vi.lhs.len(), 1);
    assert_eq!(*vi.lhs.terms().next().unwrap().1, LaurentPoly::q_pow(-3));
    assert!(rep.all_passed());
}

#[test]
fn all_relations_pass() {
    for (r, s) in [(1, 2), (2, 2), (3, 1), (3, 2), (2, 3), (4, 1)] {
        for n in [1, 2, 3] {
            let rep = presentation_check(r, s, n);
            for rel in &rep.relations {
                assert!(rel.passed, "({r},{s}) n={n} {} {}", rel.name, rel.statement);
            }
        }
    }
}

#[test]
fn coverage_of_two_two() {
    let rep = presentation_check(2, 2, 2);
    let mut names: Vec<_> = rep.relations.iter().map(|r| r.name.clone()).collect();
    names.dedup();
    for expected in ["(iii)", "(iii*)", "(iv)", "(vi)", "(vi*)", "(vii)", "(viii)", "(viii*)"] {
        assert!(names.iter().any(|n| n == expected), "{expected} missing from {names:?}");
    }
    let json = serde_json::to_value(&rep).unwrap();
    assert_eq!(json["relations"].as_array().unwrap().len(), rep.relations.len());
}
