//! The design matrix `A_Γ` of a hierarchical model and its exact rank.
//!
//! There is one row per parameter `θ^{(F)}_{i_F}` (a facet `F` together with a
//! cell of the marginal table on `F`) and one column per cell `i` of the full
//! contingency table. The entry is 1 iff `i` restricted to `F` is the row's
//! marginal cell.
//!
//! Rows come in facet blocks, facets in canonical complex order; inside a
//! block the marginal cells run lexicographically with the last coordinate
//! varying fastest. Columns are the joint cells in the same order. Cells are
//! 1-based.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::hilbert::eval_coarse_exact;
use crate::linalg::{self, RankRoute};
use crate::{Error, Face, Result, SimplicialComplex};

/// Default limit on the number of joint cells (columns).
pub const DEFAULT_SIZE_CAP: u128 = 1 << 20;

/// A complex together with the level counts `r_1..r_m` of its variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelSpec {
    complex: SimplicialComplex,
    levels: Vec<u64>,
}

impl ModelSpec {
    pub fn new(complex: SimplicialComplex, levels: Vec<u64>) -> Result<Self> {
        if levels.len() != complex.vertex_count() {
            return Err(Error::LevelCountMismatch {
                expected: complex.vertex_count(),
                got: levels.len(),
            });
        }
        if let Some(i) = levels.iter().position(|&r| r == 0) {
            return Err(Error::InvalidLevel { variable: i + 1 });
        }
        Ok(ModelSpec { complex, levels })
    }

    /// Every variable with `r` levels.
    pub fn constant(complex: SimplicialComplex, r: u64) -> Result<Self> {
        let m = complex.vertex_count();
        ModelSpec::new(complex, vec![r; m])
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn levels(&self) -> &[u64] {
        &self.levels
    }

    /// `Some(r)` when every variable has the same number of levels.
    pub fn constant_level(&self) -> Option<u64> {
        let first = self.levels[0];
        self.levels.iter().all(|&r| r == first).then_some(first)
    }

    /// `#R = Π r_i`, the number of joint cells.
    pub fn joint_cells(&self) -> BigInt {
        self.levels.iter().map(|&r| BigInt::from(r)).product()
    }

    fn joint_cells_u128(&self) -> u128 {
        self.levels
            .iter()
            .try_fold(1u128, |acc, &r| acc.checked_mul(r as u128))
            .unwrap_or(u128::MAX)
    }
}

/// Row label: a facet and one cell of its marginal table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowLabel {
    pub facet: Face,
    pub cell: Vec<u64>,
}

/// Dense 0/1 design matrix with explicit row and column labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u8>,
    row_index: Vec<RowLabel>,
    col_index: Vec<Vec<u64>>,
    /// Start of each facet's row block, plus a final sentinel.
    block_starts: Vec<usize>,
}

/// All cells of `Π [r]` in lexicographic order, last coordinate fastest.
fn cells(levels: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::with_capacity(levels.len())];
    for &r in levels {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=r).map(move |v| {
                    let mut c = prefix.clone();
                    c.push(v);
                    c
                })
            })
            .collect();
    }
    out
}

/// Builds `A_Γ` for a model, refusing more than `size_cap` columns.
pub fn build_design_matrix(spec: &ModelSpec, size_cap: u128) -> Result<DesignMatrix> {
    let columns = spec.joint_cells_u128();
    if columns > size_cap {
        return Err(Error::SizeCapExceeded { columns, cap: size_cap });
    }
    let levels = spec.levels();
    let col_index = cells(levels);
    let cols = col_index.len();

    let mut row_index = Vec::new();
    let mut block_starts = Vec::new();
    for facet in spec.complex().facets() {
        block_starts.push(row_index.len());
        let facet_levels: Vec<u64> = facet.vertices().iter().map(|&v| levels[v - 1]).collect();
        row_index.extend(cells(&facet_levels).into_iter().map(|cell| RowLabel {
            facet: facet.clone(),
            cell,
        }));
    }
    block_starts.push(row_index.len());
    let rows = row_index.len();

    let mut entries = vec![0u8; rows * cols];
    for (j, cell) in col_index.iter().enumerate() {
        for (b, facet) in spec.complex().facets().iter().enumerate() {
            // mixed-radix position of the marginal cell inside the block
            let offset = facet
                .vertices()
                .iter()
                .fold(0usize, |acc, &v| acc * levels[v - 1] as usize + (cell[v - 1] - 1) as usize);
            entries[(block_starts[b] + offset) * cols + j] = 1;
        }
    }
    Ok(DesignMatrix {
        rows,
        cols,
        entries,
        row_index,
        col_index,
        block_starts,
    })
}

impl DesignMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_index(&self) -> &[RowLabel] {
        &self.row_index
    }

    pub fn col_index(&self) -> &[Vec<u64>] {
        &self.col_index
    }

    /// Row ranges of the facet blocks, in facet order.
    pub fn blocks(&self) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        self.block_starts.windows(2).map(|w| w[0]..w[1])
    }

    /// Whether the rows of every facet block add up to the all-ones row.
    pub fn blocks_sum_to_ones(&self) -> bool {
        self.blocks().all(|block| {
            (0..self.cols).all(|j| block.clone().map(|i| self.get(i, j) as u32).sum::<u32>() == 1)
        })
    }

    pub fn column_sums(&self) -> Vec<u32> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j) as u32).sum())
            .collect()
    }

    /// `rows cols` on the first line, then one line of space-separated 0/1
    /// entries per row.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.rows * self.cols * 2 + 16);
        writeln!(out, "{} {}", self.rows, self.cols).unwrap();
        for i in 0..self.rows {
            for (j, &e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    out.push(' ');
                }
                out.push(if e == 1 { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// Rank over the rationals; see [`linalg::exact_rank`].
    pub fn exact_rank(&self) -> Result<usize> {
        linalg::exact_rank(self.rows, self.cols, |i, j| self.get(i, j) as i64)
    }

    pub fn exact_rank_with(&self, route: RankRoute) -> Result<usize> {
        linalg::exact_rank_with(self.rows, self.cols, route, |i, j| self.get(i, j) as i64)
    }
}

/// Formula value against the explicit-matrix oracle for one model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub formula_rank: BigInt,
    /// `None` when the matrix was over the size cap and not built.
    pub oracle_rank: Option<BigInt>,
}

impl Verification {
    pub fn checked(&self) -> bool {
        self.oracle_rank.is_some()
    }

    /// True only when the oracle ran and matched.
    pub fn agree(&self) -> bool {
        self.oracle_rank.as_ref() == Some(&self.formula_rank)
    }
}

/// Compares `Σ_F Π_{f∈F} (r_f - 1)` with the rank of the explicit matrix.
///
/// Over the size cap only the formula value is reported.
pub fn verify_spec(spec: &ModelSpec, size_cap: u128) -> Result<Verification> {
    let formula_rank = eval_coarse_exact(spec.complex(), spec.levels())?;
    let oracle_rank = match build_design_matrix(spec, size_cap) {
        Ok(mat) => Some(BigInt::from(mat.exact_rank()?)),
        Err(Error::SizeCapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(Verification {
        formula_rank,
        oracle_rank,
    })
}
