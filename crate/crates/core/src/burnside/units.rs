use super::marks::{BurnsideElement, MarkMatrix};
use crate::error::{Error, Result};

/// Default bound on the number of independent sign choices in a unit search.
pub const DEFAULT_ENUM_CAP: usize = 22;

/// All units of the Burnside ring: elements whose marks are all `±1`.
pub fn burnside_units(m: &MarkMatrix, cap: usize) -> Result<Vec<BurnsideElement>> {
    let blocks: Vec<usize> = (0..m.len()).collect();
    units_constant_on_blocks(m, &blocks, cap, "subgroup classes")
}

/// Units whose ghost is constant on each block, `block_of[k]` labelling class `k`.
///
/// Classes are visited from the largest subgroup down; at class `k` the
/// coefficient of `[G/K]` is already determined by the signs chosen so far, so
/// a non-integral quotient prunes the whole subtree.
pub fn units_constant_on_blocks(
    m: &MarkMatrix,
    block_of: &[usize],
    cap: usize,
    what: &'static str,
) -> Result<Vec<BurnsideElement>> {
    let n = m.len();
    assert_eq!(block_of.len(), n, "one block label per class");
    let blocks = block_of.iter().copied().max().map_or(0, |b| b + 1);
    if blocks > cap {
        return Err(Error::EnumerationCapExceeded {
            what,
            count: blocks,
            cap,
        });
    }
    let mut search = Search {
        m,
        block_of,
        signs: vec![0; blocks],
        coeffs: vec![0; n],
        found: Vec::new(),
    };
    if n > 0 {
        search.descend(n - 1);
    }
    let mut found = search.found;
    found.sort();
    Ok(found)
}

struct Search<'a> {
    m: &'a MarkMatrix,
    block_of: &'a [usize],
    signs: Vec<i64>,
    coeffs: Vec<i64>,
    found: Vec<BurnsideElement>,
}

impl Search<'_> {
    fn descend(&mut self, k: usize) {
        let b = self.block_of[k];
        let choices: &[i64] = match self.signs[b] {
            0 => &[1, -1],
            1 => &[1],
            _ => &[-1],
        };
        let fresh = self.signs[b] == 0;
        for &s in choices {
            let Some(a) = self.m.solve_step(&self.coeffs, s, k) else {
                continue;
            };
            self.coeffs[k] = a;
            if fresh {
                self.signs[b] = s;
            }
            if k == 0 {
                self.found.push(BurnsideElement {
                    coeffs: self.coeffs.clone(),
                });
            } else {
                self.descend(k - 1);
            }
            if fresh {
                self.signs[b] = 0;
            }
        }
        self.coeffs[k] = 0;
    }
}
