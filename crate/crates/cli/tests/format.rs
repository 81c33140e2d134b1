use std::path::Path;

use timeline_cli::format::{emit_instance, emit_json_instance, emit_witness, parse_instance, parse_witness};
use timeline_core::generators::gen_random;
use timeline_core::Timeline;

#[test]
fn text_and_json_round_trip_on_a_corpus() {
    let mut corpus: Vec<_> = (0..200u64)
        .map(|s| gen_random(1 + (s % 7) as u32, 1 + (s / 7 % 9) as u32, 0.4, s))
        .collect();
    let sample = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/sample.tg")).unwrap();
    corpus.push(parse_instance(&sample).unwrap());
    for g in corpus {
        let text = emit_instance(&g);
        assert_eq!(parse_instance(&text).unwrap(), g);
        assert_eq!(emit_instance(&parse_instance(&text).unwrap()), text);
        assert_eq!(parse_instance(&emit_json_instance(&g)).unwrap(), g);
    }
}

#[test]
fn emit_normalizes_layout() {
    let messy = "# header\n2   2\n1\n2 1\n\n0\n";
    let g = parse_instance(messy).unwrap();
    assert_eq!(emit_instance(&g), "2 2\n1\n1 2\n0\n");
}

#[test]
fn witness_text_is_canonical() {
    let mut a = Timeline::new();
    a.push(2, 3, 4);
    a.push(1, 1, 1);
    let mut b = Timeline::new();
    b.push(1, 1, 1);
    b.push(2, 3, 4);
    assert_eq!(emit_witness(&a), emit_witness(&b));
    assert_eq!(parse_witness(&emit_witness(&a)).unwrap(), b.normalized());
}
