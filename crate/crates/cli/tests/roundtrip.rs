mod common;

use homlie_cli::parse_document;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn serialization_is_stable() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..256 {
        let text = common::random_document(&mut rng);
        let doc = parse_document(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
        let canonical = doc.to_json();
        let reparsed = parse_document(&canonical).unwrap();
        assert_eq!(reparsed, doc);
        assert_eq!(reparsed.to_json(), canonical);
    }
}

#[test]
fn shipped_files_are_canonical() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = parse_document(&text).unwrap();
        assert_eq!(doc.to_json(), text, "{}", path.display());
    }
}
