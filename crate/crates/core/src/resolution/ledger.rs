use std::fmt;

use serde::Serialize;

use super::admissible::{is_admissible, AdmissibilityQuery};
use super::step::{invariant_value, step_delta, BlowupStep, LedgerCounts, StepKind};
use crate::arrangement::{derive_extended, ArrangementDescriptor, EulerResult};
use crate::error::LedgerError;

/// A blow-up centre waiting in the worklist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Stratum {
    Point {
        multiplicity: u32,
        triple_curves: u32,
    },
    /// `t` is the number of higher-multiplicity points on the curve at the
    /// moment it is blown up.
    Curve { multiplicity: u32, euler: i64, t: i64 },
}

impl Stratum {
    /// The blow-up this centre calls for.
    pub fn step(&self) -> Result<BlowupStep, LedgerError> {
        let query = match *self {
            Stratum::Point { multiplicity, .. } => AdmissibilityQuery { codim: 3, multiplicity },
            Stratum::Curve { multiplicity, .. } => AdmissibilityQuery { codim: 2, multiplicity },
        };
        if !is_admissible(query)?.admissible {
            return Err(LedgerError::Inadmissible(*self));
        }
        let step = match *self {
            Stratum::Point { multiplicity: 5, triple_curves } => BlowupStep::fivefold(triple_curves),
            Stratum::Point { multiplicity: 4, triple_curves: 0 } => Some(BlowupStep::C),
            Stratum::Curve { multiplicity: 3, euler, t } => Some(BlowupStep::B { euler, t }),
            Stratum::Curve { multiplicity: 2, euler, t } => Some(BlowupStep::D { euler, t }),
            _ => None,
        };
        step.ok_or(LedgerError::Inadmissible(*self))
    }
}

impl From<BlowupStep> for Stratum {
    fn from(step: BlowupStep) -> Self {
        match step {
            BlowupStep::A1 | BlowupStep::A2 | BlowupStep::A3 => Stratum::Point {
                multiplicity: 5,
                triple_curves: step.kind() as u32 - StepKind::A1 as u32,
            },
            BlowupStep::B { euler, t } => Stratum::Curve { multiplicity: 3, euler, t },
            BlowupStep::C => Stratum::Point {
                multiplicity: 4,
                triple_curves: 0,
            },
            BlowupStep::D { euler, t } => Stratum::Curve { multiplicity: 2, euler, t },
        }
    }
}

/// Tracked integers before any blow-up, plus every centre still to blow up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerState {
    pub counts: LedgerCounts,
    pub worklist: Vec<Stratum>,
}

fn spread(total: i64, slots: usize) -> Vec<i64> {
    if slots == 0 {
        return Vec::new();
    }
    let n = slots as i64;
    (0..n).map(|i| total / n + i64::from(i < total % n)).collect()
}

impl LedgerState {
    /// A worklist consistent with the descriptor's counts, for arrangements
    /// whose triple curves are lines.
    ///
    /// The descriptor does not say which points lie on which curve, so the
    /// `t` values are distributed round-robin. Double curves are the pairwise
    /// intersections that are not triple lines, followed by the ones the
    /// earlier stages create.
    pub fn from_descriptor(desc: &ArrangementDescriptor) -> Result<Self, LedgerError> {
        let ext = derive_extended(desc)?;
        let counts = LedgerCounts {
            e_ambient: 4,
            e_star: ext.e_star,
            e2: ext.e2,
            e3: ext.e3,
            p3: ext.p3,
            p5_0: ext.p5_0,
            p5_1: ext.p5_1,
            p5_2: ext.p5_2,
        };
        let mut worklist = Vec::new();
        let mut created = Vec::new();

        for (k, count) in [desc.p5_0, desc.p5_1, desc.p5_2].into_iter().enumerate() {
            for _ in 0..count {
                worklist.push(Stratum::Point {
                    multiplicity: 5,
                    triple_curves: k as u32,
                });
                created.extend([2; 5]);
            }
        }

        let triple_t = spread(desc.p4_1 + desc.p5_1 + 2 * desc.p5_2, desc.l3 as usize);
        for &t in &triple_t {
            worklist.push(Stratum::Curve { multiplicity: 3, euler: 2, t });
            created.extend([2; 3]);
            created.extend(std::iter::repeat(2).take(t as usize));
        }

        for _ in 0..desc.p4_0 {
            worklist.push(Stratum::Point {
                multiplicity: 4,
                triple_curves: 0,
            });
        }

        let mut skip_line_pairs = 3 * desc.l3;
        let mut double = Vec::new();
        let d = &desc.degrees;
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                if d[i] == 1 && d[j] == 1 && skip_line_pairs > 0 {
                    skip_line_pairs -= 1;
                    continue;
                }
                let (a, b) = (i64::from(d[i]), i64::from(d[j]));
                double.push((4 - a - b) * a * b);
            }
        }
        if skip_line_pairs > 0 {
            return Err(LedgerError::InconsistentWorklist(format!(
                "{} triple lines need more plane pairs than the degrees provide",
                desc.l3
            )));
        }
        double.extend(created);

        let a_points = 10 * desc.p5_0 + 7 * desc.p5_1 + 4 * desc.p5_2;
        let stage_d_p3 = ext.p3 + a_points + 3 * triple_t.iter().sum::<i64>();
        if double.is_empty() && stage_d_p3 > 0 {
            return Err(LedgerError::InconsistentWorklist(
                "triple points but no double curves".into(),
            ));
        }
        let ts = spread(stage_d_p3, double.len());
        worklist.extend(
            double
                .into_iter()
                .zip(ts)
                .map(|(euler, t)| Stratum::Curve { multiplicity: 2, euler, t }),
        );
        Ok(LedgerState { counts, worklist })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub step: BlowupStep,
    pub after: LedgerCounts,
    pub invariant: i64,
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = match self.step.curve_data() {
            Some((e, t)) => format!("e={e} t={t}"),
            None => String::new(),
        };
        let c = &self.after;
        write!(
            f,
            "{:<3} {:<10} e(V)={} e*={} E2={} E3={} p3={} p5=({},{},{}) inv={}",
            self.step.kind(),
            params,
            c.e_ambient,
            c.e_star,
            c.e2,
            c.e3,
            c.p3,
            c.p5_0,
            c.p5_1,
            c.p5_2,
            self.invariant
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerRun {
    pub initial: LedgerCounts,
    pub trace: Vec<TraceEntry>,
    pub result: EulerResult,
}

impl LedgerRun {
    pub fn terminal(&self) -> LedgerCounts {
        self.trace.last().map_or(self.initial, |e| e.after)
    }

    pub fn count(&self, kind: StepKind) -> usize {
        self.trace.iter().filter(|e| e.step.kind() == kind).count()
    }
}

fn stage(kind: StepKind) -> usize {
    match kind {
        StepKind::A1 | StepKind::A2 | StepKind::A3 => 0,
        StepKind::B => 1,
        StepKind::C => 2,
        StepKind::D => 3,
    }
}

fn inconsistent(what: &str, expected: i64, found: i64) -> LedgerError {
    LedgerError::InconsistentWorklist(format!("{what}: counts say {expected}, worklist has {found}"))
}

/// Checks that the centres of one stage account for what the counts say
/// must be gone once that stage is done.
fn check_stage(index: usize, counts: &LedgerCounts, steps: &[BlowupStep]) -> Result<(), LedgerError> {
    let curve_sum = |f: fn((i64, i64)) -> i64| -> i64 {
        steps.iter().filter_map(BlowupStep::curve_data).map(f).sum()
    };
    match index {
        0 => {
            for (kind, expected, name) in [
                (StepKind::A1, counts.p5_0, "p5_0"),
                (StepKind::A2, counts.p5_1, "p5_1"),
                (StepKind::A3, counts.p5_2, "p5_2"),
            ] {
                let found = steps.iter().filter(|s| s.kind() == kind).count() as i64;
                if found != expected {
                    return Err(inconsistent(name, expected, found));
                }
            }
        }
        1 => {
            let found = curve_sum(|(e, _)| e);
            if found != counts.e3 {
                return Err(inconsistent("E3", counts.e3, found));
            }
        }
        3 => {
            let e = curve_sum(|(e, _)| e);
            if e != counts.e2 {
                return Err(inconsistent("E2", counts.e2, e));
            }
            let t = curve_sum(|(_, t)| t);
            if t != counts.p3 {
                return Err(inconsistent("p3", counts.p3, t));
            }
        }
        _ => {}
    }
    Ok(())
}

/// Blows up every centre of the worklist, stage by stage, checking the
/// invariant after each step.
///
/// Within a stage the worklist order is kept.
pub fn run(initial: &LedgerState) -> Result<LedgerRun, LedgerError> {
    let mut stages: [Vec<BlowupStep>; 4] = Default::default();
    for stratum in &initial.worklist {
        let step = stratum.step()?;
        stages[stage(step.kind())].push(step);
    }

    let mut counts = initial.counts;
    let mut invariant = invariant_value(&counts);
    let mut trace = Vec::with_capacity(initial.worklist.len());
    for (index, steps) in stages.iter().enumerate() {
        check_stage(index, &counts, steps)?;
        for step in steps {
            counts += step_delta(step);
            let after = invariant_value(&counts);
            if after != invariant {
                return Err(LedgerError::InvariantViolation {
                    index: trace.len(),
                    step: *step,
                    before: invariant,
                    after,
                });
            }
            invariant = after;
            trace.push(TraceEntry {
                step: *step,
                after: counts,
                invariant,
            });
        }
    }

    if !counts.is_smooth() {
        return Err(LedgerError::NonTerminal(counts));
    }
    Ok(LedgerRun {
        initial: initial.counts,
        trace,
        result: EulerResult::ledger(2 * counts.e_ambient - counts.e_star),
    })
}
