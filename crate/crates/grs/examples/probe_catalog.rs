use std::time::Instant;

fn main() {
    for entry in grs::diagram::catalog().entries() {
        let t = Instant::now();
        match grs::carter::realize_full(&entry.name) {
            Ok(r) => {
                let cls = grs::carter::classify_grs(&r.presentation);
                let verify = grs::carter::verify_admissible(
                    &r.ambient,
                    &r.element,
                    &grs::carter::AdmissibleRep::new(
                        r.roots[..r.group1_len].to_vec(),
                        r.roots[r.group1_len..].to_vec(),
                    ),
                );
                println!(
                    "{:10} realize ok ({:.2?}), classify={:?}, verify_ok={:?}",
                    entry.name,
                    t.elapsed(),
                    cls.map(|c| c.names()),
                    verify.map(|v| v.ok()),
                );
            }
            Err(e) => println!("{:10} FAILED: {e} ({:.2?})", entry.name, t.elapsed()),
        }
    }
}
