use crate::constructions::GadgetBlueprint;

use super::{solve_worm, SearchConfig, SolveStatus};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyEntry {
    pub name: String,
    /// Status, or the error that stopped this candidate.
    pub outcome: Result<SolveStatus, String>,
}

impl FamilyEntry {
    pub fn is_unsat(&self) -> bool {
        matches!(self.outcome, Ok(SolveStatus::Unsat))
    }
}

/// Runs the WORM solver on every blueprint, in input order. Failures are
/// recorded per candidate and do not stop the batch.
pub fn gadget_family_search(
    blueprints: &[GadgetBlueprint],
    rainbow: usize,
    mono: usize,
    cfg: &SearchConfig,
) -> Vec<FamilyEntry> {
    blueprints
        .iter()
        .map(|b| {
            let outcome = b
                .build()
                .map_err(|e| e.to_string())
                .and_then(|g| solve_worm(&g, rainbow, mono, cfg).map(|r| r.status).map_err(|e| e.to_string()));
            FamilyEntry { name: b.name.to_string(), outcome }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::gadget_variants;

    #[test]
    fn empty_input_gives_empty_report() {
        assert!(gadget_family_search(&[], 3, 3, &SearchConfig::default()).is_empty());
    }

    #[test]
    fn cycle_dummy_is_sat() {
        let dummy =
            GadgetBlueprint { name: "cycle-6", vertex_count: 6, faces: vec![(0..6).collect(), (0..6).collect()] };
        let report = gadget_family_search(&[dummy], 3, 3, &SearchConfig::default());
        assert_eq!(report[0].outcome, Ok(SolveStatus::Sat));
    }

    #[test]
    fn bad_candidate_does_not_abort_batch() {
        let broken = GadgetBlueprint { name: "broken", vertex_count: 4, faces: vec![vec![0, 1, 2]] };
        let report = gadget_family_search(&[broken, GadgetBlueprint::worm()], 3, 3, &SearchConfig::default());
        assert!(report[0].outcome.is_err());
        assert!(report[1].is_unsat());
    }

    #[test]
    fn family_report() {
        let report = gadget_family_search(&gadget_variants(), 3, 3, &SearchConfig::default());
        let unsat: Vec<_> = report.iter().filter(|e| e.is_unsat()).map(|e| e.name.as_str()).collect();
        assert_eq!(unsat, vec!["outer-chord-w2w5", "outer-chord-w1w4", "outer-chord-w2w5-split"]);
        let canonical = report.iter().find(|e| e.name == "fan-w3").unwrap();
        assert_eq!(canonical.outcome, Ok(SolveStatus::Sat));
    }
}
