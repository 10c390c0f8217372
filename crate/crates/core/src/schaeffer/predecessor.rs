use crate::error::{Error, Result};

/// `P(i)`: the last position before `i` whose label is one less than the
/// label at `i`, with the convention `R(-1) = 0`. `-1` denotes that virtual
/// position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredecessorTable(Vec<isize>);

impl PredecessorTable {
    pub fn as_slice(&self) -> &[isize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> isize {
        self.0[i]
    }
}

/// Fails unless `R(0) = 1`, `R >= 1` and every increment is at most `+1`.
pub fn check_label_process(r: &[i32]) -> Result<()> {
    match r.first() {
        None => return Err(Error::InvalidLabelProcess("empty sequence".into())),
        Some(&first) if first != 1 => {
            return Err(Error::InvalidLabelProcess(format!("R(0) = {first}, expected 1")))
        }
        _ => {}
    }
    if let Some(i) = r.iter().position(|&x| x < 1) {
        return Err(Error::InvalidLabelProcess(format!("R({i}) = {} < 1", r[i])));
    }
    if let Some(i) = r.windows(2).position(|w| w[1] > w[0] + 1) {
        return Err(Error::InvalidLabelProcess(format!("R climbs by more than one at {}", i + 1)));
    }
    Ok(())
}

pub fn predecessor_table(r: &[i32]) -> Result<PredecessorTable> {
    check_label_process(r)?;
    Ok(predecessors_unchecked(r))
}

pub(crate) fn predecessors_unchecked(r: &[i32]) -> PredecessorTable {
    let max = r.iter().copied().max().unwrap_or(1) as usize;
    // last[l] = last position seen so far with label l.
    let mut last = vec![-1isize; max + 1];
    let p = r
        .iter()
        .enumerate()
        .map(|(i, &label)| {
            let label = label as usize;
            let pred = last[label - 1];
            last[label] = i as isize;
            pred
        })
        .collect();
    PredecessorTable(p)
}
