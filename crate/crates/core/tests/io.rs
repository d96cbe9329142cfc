mod common;

use tokenjump::instances::{format_instance, parse_instance, read_instance, write_instance, FileError};

#[test]
fn write_then_read_is_identity() {
    let dir = tempfile::tempdir().unwrap();
    let mut cases = common::named();
    cases.extend(common::random_planar(40, 9));
    for (i, case) in cases.iter().enumerate() {
        let path = dir.path().join(format!("{i}.tj"));
        write_instance(&case.inst, &path).unwrap();
        let back = read_instance(&path).unwrap();
        assert_eq!(back, case.inst, "{}", case.label);
        assert_eq!(
            format_instance(&back).unwrap(),
            format_instance(&case.inst).unwrap()
        );
    }
}

#[test]
fn semantic_and_syntactic_errors_differ() {
    let semantic = parse_instance("tj 4 2 1 3\ne 1 2\ne 2 3\ns 1\ng 1\n");
    assert!(semantic.is_ok());
    let dependent = parse_instance("tj 4 2 2 3\ne 1 2\ne 2 3\ns 1 2\ng 1 3\n").unwrap_err();
    assert!(matches!(dependent, FileError::Semantic(_)));
    assert_eq!(dependent.to_string(), "start set not independent");
    let arity = parse_instance("tj 4 2 2 3\ne 1 2\ne 2 3\ns 1 3 0\ng 1 3\n").unwrap_err();
    assert!(matches!(arity, FileError::Parse { line: 4, .. }));
}

#[test]
fn missing_file() {
    assert!(matches!(
        read_instance("/nonexistent/x.tj"),
        Err(FileError::Io { .. })
    ));
}
