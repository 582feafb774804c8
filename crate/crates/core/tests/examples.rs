// Runs every example through its `run_example` entry point.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));
        }
    };
}

example!(necklaces);
example!(segmentations);
example!(closed_forms);
example!(oracle_verification);
example!(wilf_classes);
example!(conjectures);
example!(c12_discrepancy);
example!(documents);

#[test]
fn necklaces_runs() {
    let out = necklaces::run_example().unwrap();
    assert!(out.contains("  0001 (primitive, root length 4)"));
    assert!(out.contains("  0101 (periodic, root length 2)"));
}

#[test]
fn segmentations_runs() {
    let out = segmentations::run_example().unwrap();
    assert!(out.contains("cyclic unimodal permutations of length 4: 2341 3421"));
    assert!(out.contains("+-+: in class true, 4 segmentations"));
}

#[test]
fn closed_forms_runs() {
    let out = closed_forms::run_example().unwrap();
    assert!(out
        .lines()
        .any(|l| l.starts_with("4\t3\t3\t5\t5\t5\t5\t5\t5")));
    assert!(out.contains("c_5(2): domain error"));
}

#[test]
fn oracle_verification_runs() {
    let out = oracle_verification::run_example(6).unwrap();
    assert!(out.contains("bijection: 48 records, 0 failures"));
    assert!(!out.contains("undocumented"));
}

#[test]
fn wilf_classes_runs() {
    let out = wilf_classes::run_example(7).unwrap();
    assert!(out.contains("full classes: {s1} {s2} {s3,s4} {s5,s7} {s6,s8}"));
    assert!(out.contains("weak classes: {s1,s2} {s3,s4} {s5,s6,s7,s8}"));
    assert!(out.contains("formula and oracle partitions of s3..s8 agree: true"));
}

#[test]
fn conjectures_runs() {
    let out = conjectures::run_example(3, 7).unwrap();
    assert!(out.starts_with("complement: k <= 3, n in 3..=7"));
    assert!(out.contains("alternating: k <= 3"));
}

#[test]
fn c12_discrepancy_runs() {
    let out = c12_discrepancy::run_example(5).unwrap();
    assert!(out.lines().any(|l| l == "4\t1\t3\t6\t3"));
    assert!(out.contains("0 undocumented mismatches"));
}

#[test]
fn documents_runs() {
    let dir = tempfile::tempdir().unwrap();
    let out = documents::run_example(dir.path()).unwrap();
    assert!(out.contains("4,5,formula"));
    assert!(out.contains("cached JSON identical: true"));
    assert!(out.contains("\"status\": \"not queried\""));
}
