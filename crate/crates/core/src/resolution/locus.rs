use std::collections::BTreeSet;

use serde::Serialize;

use super::ledger::{run, LedgerRun, LedgerState, Stratum};
use super::step::{step_delta, BlowupStep, LedgerCounts};
use crate::error::{GeometryError, LedgerError};
use crate::geometry::IncidenceReport;

type Comps = BTreeSet<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Curve {
    comps: Comps,
    euler: i64,
}

/// Combinatorial model of the branch locus and its strata during the
/// resolution.
///
/// Components carry only their Euler number. A curve or point is recorded by
/// the set of components through it, and a point lies on a curve iff the
/// curve's set is contained in the point's. This is exact for plane
/// arrangements and for the exceptional components the resolution adds,
/// since any two of them meet in at most one curve and a curve meets a
/// component not containing it in at most one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchLocus {
    e_ambient: i64,
    components: Vec<i64>,
    curves: Vec<Curve>,
    points: Vec<Comps>,
}

/// A completed resolution: the worklist the model produced and the ledger run
/// over it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Resolution {
    pub state: LedgerState,
    pub run: LedgerRun,
}

impl BranchLocus {
    /// Plane arrangement in projective 3-space.
    pub fn from_report(report: &IncidenceReport) -> Result<Self, LedgerError> {
        if !report.violations.is_empty() {
            return Err(GeometryError::Violations(report.violations.clone()).into());
        }
        Ok(BranchLocus {
            e_ambient: 4,
            components: vec![3; report.plane_count],
            curves: report
                .lines
                .iter()
                .map(|l| Curve {
                    comps: l.planes_through.clone(),
                    euler: 2,
                })
                .collect(),
            points: report.points.iter().map(|p| p.planes.clone()).collect(),
        })
    }

    fn triple_curves_in(&self, point: &Comps) -> Vec<Comps> {
        self.curves
            .iter()
            .filter(|c| c.comps.len() == 3 && c.comps.is_subset(point))
            .map(|c| c.comps.clone())
            .collect()
    }

    pub fn counts(&self) -> LedgerCounts {
        let curve_sum = |q: usize| -> i64 {
            self.curves
                .iter()
                .filter(|c| c.comps.len() == q)
                .map(|c| c.euler)
                .sum()
        };
        let mut p5 = [0i64; 3];
        for point in self.points.iter().filter(|p| p.len() == 5) {
            let k = self.triple_curves_in(point).len().min(2);
            p5[k] += 1;
        }
        LedgerCounts {
            e_ambient: self.e_ambient,
            e_star: self.components.iter().sum(),
            e2: curve_sum(2),
            e3: curve_sum(3),
            p3: self.points.iter().filter(|p| p.len() == 3).count() as i64,
            p5_0: p5[0],
            p5_1: p5[1],
            p5_2: p5[2],
        }
    }

    fn add_component(&mut self, euler: i64) -> usize {
        self.components.push(euler);
        self.components.len() - 1
    }

    fn take_point(&mut self, len: usize) -> Option<Comps> {
        let idx = self.points.iter().position(|p| p.len() == len)?;
        Some(self.points.remove(idx))
    }

    /// Removes every point strictly containing `curve`, returning the extra
    /// component of each.
    fn take_points_over(&mut self, curve: &Comps, len: usize) -> Vec<usize> {
        let mut extra = Vec::new();
        self.points.retain(|p| {
            if p.len() == len && curve.is_subset(p) {
                extra.extend(p.difference(curve));
                false
            } else {
                true
            }
        });
        extra
    }

    fn blow_up_fivefold(&mut self, point: Comps) -> Result<BlowupStep, LedgerError> {
        let triples = self.triple_curves_in(&point);
        let step = BlowupStep::fivefold(triples.len() as u32).ok_or(LedgerError::Inadmissible(
            Stratum::Point {
                multiplicity: 5,
                triple_curves: triples.len() as u32,
            },
        ))?;
        let e = self.add_component(3);
        self.e_ambient += 2;
        for &i in &point {
            self.components[i] += 1;
            self.curves.push(Curve {
                comps: Comps::from([e, i]),
                euler: 2,
            });
        }
        let members: Vec<usize> = point.iter().copied().collect();
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                if !triples.iter().any(|t| t.contains(&i) && t.contains(&j)) {
                    self.points.push(Comps::from([e, i, j]));
                }
            }
        }
        for mut t in triples {
            t.insert(e);
            self.points.push(t);
        }
        Ok(step)
    }

    fn blow_up_triple_curve(&mut self, curve: Curve) -> BlowupStep {
        let f = self.add_component(2 * curve.euler);
        self.e_ambient += curve.euler;
        for &i in &curve.comps {
            self.curves.push(Curve {
                comps: Comps::from([f, i]),
                euler: curve.euler,
            });
        }
        let extra = self.take_points_over(&curve.comps, 4);
        for &x in &extra {
            self.components[x] += 1;
            self.curves.push(Curve {
                comps: Comps::from([f, x]),
                euler: 2,
            });
            for &i in &curve.comps {
                self.points.push(Comps::from([f, i, x]));
            }
        }
        BlowupStep::B {
            euler: curve.euler,
            t: extra.len() as i64,
        }
    }

    fn blow_up_fourfold(&mut self, point: Comps) -> Result<BlowupStep, LedgerError> {
        let k = self.triple_curves_in(&point).len() as u32;
        if k != 0 {
            return Err(LedgerError::Inadmissible(Stratum::Point {
                multiplicity: 4,
                triple_curves: k,
            }));
        }
        self.e_ambient += 2;
        for &i in &point {
            self.components[i] += 1;
        }
        Ok(BlowupStep::C)
    }

    fn blow_up_double_curve(&mut self, curve: Curve) -> BlowupStep {
        self.e_ambient += curve.euler;
        let extra = self.take_points_over(&curve.comps, 3);
        for &x in &extra {
            self.components[x] += 1;
        }
        BlowupStep::D {
            euler: curve.euler,
            t: extra.len() as i64,
        }
    }

    /// Resolves with double curves blown up in their canonical order.
    pub fn resolve(&self) -> Result<Resolution, LedgerError> {
        self.resolve_inner(None)
    }

    /// Resolves with the stage-d double curves blown up in the given order,
    /// a permutation of `0..n` where `n` is the number of double curves left
    /// after stage c.
    pub fn resolve_with_order(&self, order: &[usize]) -> Result<Resolution, LedgerError> {
        self.resolve_inner(Some(order))
    }

    fn resolve_inner(&self, order: Option<&[usize]>) -> Result<Resolution, LedgerError> {
        let mut model = self.clone();
        let initial = model.counts();
        let mut expected = initial;
        let mut steps = Vec::new();

        let mut record = |model: &BranchLocus, step: BlowupStep| -> Result<(), LedgerError> {
            expected += step_delta(&step);
            let found = model.counts();
            if found != expected {
                return Err(LedgerError::ModelMismatch {
                    index: steps.len(),
                    step,
                    expected,
                    found,
                });
            }
            steps.push(step);
            Ok(())
        };

        while let Some(point) = model.take_point(5) {
            let step = model.blow_up_fivefold(point)?;
            record(&model, step)?;
        }
        while let Some(idx) = model.curves.iter().position(|c| c.comps.len() == 3) {
            let curve = model.curves.remove(idx);
            let step = model.blow_up_triple_curve(curve);
            record(&model, step)?;
        }
        while let Some(point) = model.take_point(4) {
            let step = model.blow_up_fourfold(point)?;
            record(&model, step)?;
        }

        let double = std::mem::take(&mut model.curves);
        let n = double.len();
        let order: Vec<usize> = match order {
            None => (0..n).collect(),
            Some(order) => {
                let distinct: BTreeSet<usize> = order.iter().copied().collect();
                if order.len() != n || distinct.len() != n || distinct.iter().any(|&i| i >= n) {
                    return Err(LedgerError::BadOrder {
                        given: order.len(),
                        expected: n,
                    });
                }
                order.to_vec()
            }
        };
        let mut slots: Vec<Option<Curve>> = double.into_iter().map(Some).collect();
        // Curves not yet blown up stay visible to the count check.
        model.curves = slots.iter().flatten().cloned().collect();
        for idx in order {
            let curve = slots[idx].take().expect("order is a permutation");
            model.curves = slots.iter().flatten().cloned().collect();
            let step = model.blow_up_double_curve(curve);
            record(&model, step)?;
        }

        let state = LedgerState {
            counts: initial,
            worklist: steps.iter().copied().map(Stratum::from).collect(),
        };
        let run = run(&state)?;
        let terminal = model.counts();
        if !terminal.is_smooth() || run.terminal() != terminal {
            return Err(LedgerError::NonTerminal(terminal));
        }
        Ok(Resolution { state, run })
    }
}
