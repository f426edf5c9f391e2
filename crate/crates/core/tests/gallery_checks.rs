use semiring_ideals::checks::{proposition_ids, run_checks, Selection};
use semiring_ideals::gallery;

#[test]
fn every_gallery_semiring_passes_every_proposition() {
    for s in gallery::gallery() {
        let report = run_checks(&s, &Selection::All, None).unwrap();
        eprintln!("{:>6} {:>6} ms", report.semiring, report.elapsed_ms);
        for p in &report.propositions {
            assert!(p.failures.is_empty(), "{} {}: {:?}", s.name(), p.id, &p.failures[..p.failures.len().min(5)]);
            assert!(p.instances > 0, "{} {}: no instances", s.name(), p.id);
        }
        assert_eq!(report.propositions.len(), proposition_ids().len());
    }
}
