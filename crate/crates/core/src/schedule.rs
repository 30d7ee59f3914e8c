//! Hourglass schedules: ordered include/contract operations over
//! intermediate-complex indices.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScheduleOp {
    Include(usize),
    Contract(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HourglassSchedule {
    ops: Vec<ScheduleOp>,
}

impl HourglassSchedule {
    pub fn new(ops: Vec<ScheduleOp>) -> Self {
        HourglassSchedule { ops }
    }

    /// All includes in one permuted order followed by all contracts in
    /// another; the phase-separated special case.
    pub fn phase_separated(include_order: &[usize], contract_order: &[usize]) -> Self {
        let mut ops: Vec<ScheduleOp> =
            include_order.iter().map(|&i| ScheduleOp::Include(i)).collect();
        ops.extend(contract_order.iter().map(|&i| ScheduleOp::Contract(i)));
        HourglassSchedule { ops }
    }

    pub fn ops(&self) -> &[ScheduleOp] {
        &self.ops
    }

    /// Checks that each index in `0..n_complexes` is included exactly once,
    /// contracted at most once, and contracted only after its include.
    pub fn validate(&self, n_complexes: usize) -> Result<()> {
        let mut included = vec![false; n_complexes];
        let mut contracted = vec![false; n_complexes];
        for op in &self.ops {
            let (ScheduleOp::Include(i) | ScheduleOp::Contract(i)) = *op;
            if i >= n_complexes {
                return Err(Error::UnknownIndex(i, n_complexes));
            }
            match *op {
                ScheduleOp::Include(i) => {
                    if included[i] {
                        return Err(Error::DuplicateInclude(i));
                    }
                    included[i] = true;
                }
                ScheduleOp::Contract(i) => {
                    if !included[i] {
                        return Err(Error::ContractBeforeInclude(i));
                    }
                    if contracted[i] {
                        return Err(Error::DuplicateContract(i));
                    }
                    contracted[i] = true;
                }
            }
        }
        for (i, &inc) in included.iter().enumerate() {
            if !inc {
                return Err(Error::MissingValue(format!("include of complex {i}")));
            }
        }
        Ok(())
    }

    /// True when every included complex is also contracted, so the sequence
    /// terminates at a point.
    pub fn is_complete(&self, n_complexes: usize) -> bool {
        let mut contracted = vec![false; n_complexes];
        for op in &self.ops {
            if let ScheduleOp::Contract(i) = *op {
                if i < n_complexes {
                    contracted[i] = true;
                }
            }
        }
        contracted.iter().all(|&c| c)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: Vec<OpFile> = serde_json::from_str(text)?;
        let mut ops = Vec::with_capacity(file.len());
        for entry in file {
            let op = match entry.op.as_str() {
                "include" => ScheduleOp::Include(entry.ic),
                "contract" => ScheduleOp::Contract(entry.ic),
                other => return Err(Error::Json(format!("unknown schedule op {other:?}"))),
            };
            ops.push(op);
        }
        Ok(HourglassSchedule { ops })
    }

    pub fn to_json(&self) -> String {
        let file: Vec<OpFile> = self
            .ops
            .iter()
            .map(|op| match *op {
                ScheduleOp::Include(ic) => OpFile {
                    op: "include".to_string(),
                    ic,
                },
                ScheduleOp::Contract(ic) => OpFile {
                    op: "contract".to_string(),
                    ic,
                },
            })
            .collect();
        serde_json::to_string(&file).expect("schedule serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
struct OpFile {
    op: String,
    ic: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use ScheduleOp::{Contract, Include};

    #[test]
    fn phase_separated_two_levels_is_valid() {
        let s = HourglassSchedule::new(vec![Include(0), Include(1), Contract(1), Contract(0)]);
        assert!(s.validate(2).is_ok());
        assert!(s.is_complete(2));
    }

    #[test]
    fn contract_before_include_rejected() {
        let s = HourglassSchedule::new(vec![Contract(0), Include(0)]);
        assert_eq!(s.validate(1).unwrap_err(), Error::ContractBeforeInclude(0));
    }

    #[test]
    fn interleaved_schedule_is_valid() {
        let s = HourglassSchedule::new(vec![Include(0), Contract(0), Include(1), Contract(1)]);
        assert!(s.validate(2).is_ok());
    }

    #[test]
    fn duplicate_include_rejected() {
        let s = HourglassSchedule::new(vec![Include(0), Include(0)]);
        assert_eq!(s.validate(1).unwrap_err(), Error::DuplicateInclude(0));
    }

    #[test]
    fn unknown_index_rejected() {
        let s = HourglassSchedule::new(vec![Include(3)]);
        assert_eq!(s.validate(2).unwrap_err(), Error::UnknownIndex(3, 2));
    }

    #[test]
    fn incomplete_schedule_detected() {
        let s = HourglassSchedule::new(vec![Include(0), Include(1), Contract(0)]);
        assert!(s.validate(2).is_ok());
        assert!(!s.is_complete(2));
    }

    #[test]
    fn json_round_trip() {
        let s = HourglassSchedule::new(vec![Include(0), Contract(0), Include(1)]);
        let back = HourglassSchedule::from_json(&s.to_json()).unwrap();
        assert_eq!(s, back);
    }
}
