mod support;

use fenchel::{emit_surface, parse_surface};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::{any_twist, cli, random_surface, real_twist};

#[test]
fn chain_examples_through_the_pipeline() {
    let (code, zero, _) = cli(&["gen-chain", "--genus", "2", "--twists", "0,0,0"], "");
    assert_eq!(code, 0);
    let (code, out, _) = cli(&["trace"], &zero);
    assert_eq!(code, 0);
    assert!(out.contains("\nn: 3\n"), "{out}");

    let (_, half, _) = cli(&["gen-chain", "--genus", "2", "--twists", "1/2,1/2,1/2"], "");
    let (_, out, _) = cli(&["trace", "-"], &half);
    assert!(out.contains("\nn: 1\n"), "{out}");
}

#[test]
fn exit_codes() {
    let (_, third, _) = cli(&["gen-chain", "--genus", "3", "--twists", "1/3"], "");
    assert_eq!(cli(&["check"], &third).0, 1);
    let (code, _, err) = cli(&["trace"], &third);
    assert_eq!(code, 1);
    assert!(err.contains("not real"));
    assert_eq!(cli(&["classify"], &third).0, 1);
    assert_eq!(cli(&["bounds"], &third).0, 1);

    let (code, _, err) = cli(&["no-such-command"], "");
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));
    assert_eq!(cli(&[], "").0, 2);
    assert_eq!(cli(&["--help"], "").0, 0);

    let (code, _, err) = cli(&["check"], "pants 2\nedge 0 0.0 1.0 len 1 twist 0/1\nedge 1 0.0 1.1 len 1 twist 0/1\nedge 2 0.2 1.2 len 1 twist 0/1\n");
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
    assert_eq!(cli(&["check", "/nonexistent/surface.txt"], "").0, 2);
    assert_eq!(cli(&["gen-chain", "--genus", "2", "--twists", "0,0"], "").0, 2);
    assert_eq!(cli(&["gen-chain", "--genus", "1", "--twists", "0"], "").0, 2);
}

#[test]
fn gen_chain_accepts_lengths_and_negative_twists() {
    let (code, text, _) = cli(&["gen-chain", "--genus", "3", "--twists", "-1/2", "--lengths", "1.25"], "");
    assert_eq!(code, 0);
    let s = parse_surface(&text).unwrap();
    assert!(s.is_real());
    assert!(s.lengths().iter().all(|&l| l == 1.25));
}

#[test]
fn files_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for genus in 2..=6 {
        for _ in 0..40 {
            let s = random_surface(genus, 1e-3, 50.0, any_twist, &mut rng);
            let text = emit_surface(&s);
            let back = parse_surface(&text).unwrap();
            assert_eq!(back, s);
            assert_eq!(emit_surface(&back), text);
        }
    }
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let text = "# a theta graph\n\npants 2   # two pants\nedge 0 0.0 1.0 len 1 twist 0/1\n  edge 1 0.1 1.1 len 2 twist 1/2 # half\nedge 2 0.2 1.2 len 3 twist 2/4\n";
    let s = parse_surface(text).unwrap();
    assert_eq!(s.genus(), 2);
    assert!(s.is_real());
}

#[test]
fn svg_is_xml_with_one_polygon_per_fixed_curve() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let dir = std::env::temp_dir().join(format!("fenchel-svg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for genus in 2..=5 {
        for i in 0..5 {
            let s = random_surface(genus, 0.5, 6.0, real_twist, &mut rng);
            let path = dir.join(format!("g{genus}-{i}.svg"));
            let (code, _, err) = cli(&["render", "--out", path.to_str().unwrap()], &emit_surface(&s));
            assert_eq!(code, 0, "{err}");
            let svg = std::fs::read_to_string(&path).unwrap();
            let doc = roxmltree::Document::parse(&svg).unwrap();
            let polygons = doc.descendants().filter(|n| n.has_tag_name("polygon")).count();
            assert_eq!(polygons, s.trace_fixed_curves().unwrap().n());
            let labels = doc.descendants().filter(|n| n.has_tag_name("text") && n.text().is_some_and(|t| t.starts_with('e'))).count();
            assert_eq!(labels, s.graph().edge_count());
        }
    }
    // not real: the graph is still drawn, without overlays
    let (_, third, _) = cli(&["gen-chain", "--genus", "2", "--twists", "1/3"], "");
    let (code, svg, _) = cli(&["render", "--out", "-"], &third);
    assert_eq!(code, 0);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(doc.descendants().filter(|n| n.has_tag_name("polygon")).count(), 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reports_are_byte_identical() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for genus in 2..=4 {
        let text = emit_surface(&random_surface(genus, 1.0, 4.0, real_twist, &mut rng));
        for cmd in ["check", "trace", "classify", "bounds"] {
            let first = cli(&[cmd], &text);
            assert_eq!(first.0, 0);
            assert_eq!(first, cli(&[cmd], &text));
        }
        assert_eq!(cli(&["render", "--out", "-"], &text), cli(&["render", "--out", "-"], &text));
    }
}

#[test]
fn oracle_verify_passes() {
    let (code, out, _) = cli(&["oracle-verify"], "");
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().count(), 8);
}
