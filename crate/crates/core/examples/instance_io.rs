//! Generate an instance from a family spec, write it as `.tj`, read it back,
//! and store a sequence as JSON.

use tokenjump::fpt;
use tokenjump::instances::{self, FamilySpec};

fn main() {
    let dir = std::env::temp_dir().join("tokenjump-example");
    std::fs::create_dir_all(&dir).unwrap();
    let spec: FamilySpec = "family=grid,rows=3,cols=4,k=3,seed=7".parse().unwrap();
    let inst = instances::generate(&spec).unwrap();
    let path = dir.join("grid.tj");
    instances::write_instance(&inst, &path).unwrap();
    print!("{}", instances::format_instance(&inst).unwrap());

    let back = instances::read_instance(&path).unwrap();
    assert_eq!(back, inst);
    let out = fpt::solve(&back).unwrap();
    if let Some(seq) = &out.sequence {
        let seq_path = dir.join("grid.seq.json");
        instances::write_sequence(seq, &seq_path).unwrap();
        println!(
            "{} -> {}",
            seq_path.display(),
            std::fs::read_to_string(&seq_path).unwrap().trim()
        );
    }

    match instances::parse_instance("tj 3 1 2 3\ne 0 1\ns 0\ng 1 2\n") {
        Err(e) => println!("malformed input: {e}"),
        Ok(_) => unreachable!(),
    }
    match instances::parse_instance("tj 4 2 2 3\ne 1 2\ne 2 3\ns 1 2\ng 1 3\n") {
        Err(e) => println!("invalid instance: {e}"),
        Ok(_) => unreachable!(),
    }
}
