//! Write a family in the canonical text format and read it back.
//!
//! ```text
//! cargo run --example file_roundtrip
//! ```

use crossfam::generators::{cycle, wrap};
use crossfam::io;

fn main() -> crossfam::Result<()> {
    let family = wrap(&cycle(5)?)?.with_labels(["a", "b", "c", "d", "e"].map(String::from).to_vec())?;
    let text = io::serialize(&family);
    print!("{text}");

    let parsed = io::parse(&text)?;
    assert_eq!(parsed.family, family);
    assert!(parsed.warnings.is_empty());

    // Unsorted members and repeated edges are accepted with warnings.
    let messy = r#"{"version": 1, "vertices": 3, "a": [[2, 0], [0, 2]], "b": [[1, 0]]}"#;
    let parsed = io::parse(messy)?;
    for w in &parsed.warnings {
        println!("warning: {w}");
    }
    print!("{}", io::serialize(&parsed.family));
    Ok(())
}
