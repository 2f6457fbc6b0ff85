use std::time::{Duration, Instant};

use rfa_cli::scenario::{preset, run_scenario, PRESETS};

#[test]
fn every_preset_runs_and_writes_its_files() {
    let dir = tempfile::tempdir().unwrap();
    for name in PRESETS {
        let cfg = preset(name).unwrap();
        let start = Instant::now();
        let out = run_scenario(&cfg, Some(dir.path())).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(start.elapsed() < Duration::from_secs(60), "{name} too slow");
        assert_eq!(out.files.len(), 2, "{name}");
        assert!(out.files.iter().all(|f| f.exists()));
        assert!(
            out.table.rows().iter().flatten().all(|v| v.is_finite()),
            "{name}"
        );
    }
}

#[test]
fn fig6_svg_has_one_polyline_per_band_edge() {
    let mut cfg = preset("fig6").unwrap();
    cfg.output = None;
    let svg = run_scenario(&cfg, None).unwrap().svg.unwrap();
    assert_eq!(svg.matches(r#"<polyline class="band""#).count(), 22);
    assert_eq!(svg.matches(r#"<polyline class="crisp""#).count(), 1);
    assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
}

#[test]
fn phase_table_columns() {
    let mut cfg = preset("fig12").unwrap();
    cfg.output = None;
    cfg.t_span = (0.0, 1.0);
    let out = run_scenario(&cfg, None).unwrap();
    assert_eq!(&out.table.headers()[..4], ["t", "r", "y_re", "y_fu"]);
}
