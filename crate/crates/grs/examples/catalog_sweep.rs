//! Sweeps the diagram catalog: realizes every entry inside its ambient
//! classical system, verifies the admissible element, and classifies the
//! realized presentation back. Prints one line per entry.

use std::time::Instant;

use grs::carter::{classify_grs, realize_full, verify_admissible, AdmissibleRep};

fn main() {
    for entry in grs::diagram::catalog().entries() {
        let t = Instant::now();
        let r = realize_full(&entry.name).expect("catalog entries realize");
        let rep = AdmissibleRep::new(
            r.roots[..r.group1_len].to_vec(),
            r.roots[r.group1_len..].to_vec(),
        );
        let verified = verify_admissible(&r.ambient, &r.element, &rep)
            .expect("ambient is positive definite")
            .ok();
        let name = classify_grs(&r.presentation)
            .expect("realized presentations classify")
            .single_name()
            .expect("irreducible")
            .to_string();
        println!(
            "{:10}  ambient {:4}  verified={verified}  classifies={name:10}  {:?}",
            entry.name,
            entry.ambient.label(),
            t.elapsed()
        );
        assert!(verified);
        assert_eq!(name, entry.name);
    }
}
