use std::collections::HashMap;
use std::time::{Duration, Instant};

use super::sweep::{dual_sweep, sweep, CriticalPoint, DualResult, SweepResult};
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::grid::{Vertex, VoxelGrid};
use crate::preprocess::{preprocess, PreprocessReport};
use crate::report::Betti;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Timing {
    pub preprocess: Duration,
    /// Both sweeps and the boundary matrices.
    pub sweeps: Duration,
    pub rank: Duration,
}

impl Timing {
    /// Preprocessing plus matrix construction, excluding ranks.
    pub fn construct(&self) -> Duration {
        self.preprocess + self.sweeps
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BettiReport {
    pub betti: Betti,
    pub chi: i64,
    pub c0: usize,
    pub c1: usize,
    pub c2: usize,
    pub monkey: usize,
    pub rank_d1: usize,
    pub rank_d2: usize,
    /// All critical points of both passes, the corner minimum included.
    pub n_c: usize,
    pub timing: Timing,
}

/// Betti numbers from the ranks of the two boundary matrices.
pub fn betti(sweep: &SweepResult, dual: &DualResult) -> Result<BettiReport> {
    if sweep.c1.len() != dual.c1.len() {
        return Err(Error::PassMismatch { f: sweep.c1.len(), h: dual.c1.len() });
    }
    let r1 = sweep.d1.rank();
    let r2 = dual.d2.rank();
    let (c0, c1, c2) = (sweep.c0.len(), sweep.c1.len(), dual.c2_dim());
    let b = [
        c0 as i64 - r1 as i64,
        c1 as i64 - r1 as i64 - r2 as i64,
        c2 as i64 - r2 as i64,
    ];
    if let Some((index, &value)) = b.iter().enumerate().find(|(_, &x)| x < 0) {
        return Err(Error::NegativeBetti { index, value });
    }
    let betti = Betti::new(b[0] as usize, b[1] as usize, b[2] as usize);
    Ok(BettiReport {
        betti,
        chi: betti.chi(),
        c0,
        c1,
        c2,
        monkey: sweep.monkey_count(),
        rank_d1: r1,
        rank_d2: r2,
        n_c: c0 + c1 + c2 + 1,
        timing: Timing::default(),
    })
}

/// `V − E + F − C` over the cells of the occupied cubes.
pub fn euler_cell_count(grid: &VoxelGrid) -> i64 {
    let [nx, ny, nz] = grid.dims().map(|d| d as i64);
    let occ = |i: i64, j: i64, k: i64| grid.get(i, j, k);
    let (mut v, mut e, mut f, mut c) = (0i64, 0i64, 0i64, 0i64);
    for z in 0..=nz {
        for y in 0..=ny {
            for x in 0..=nx {
                // vertex (x, y, z): any of its eight cubes
                let mut any = false;
                for dz in [-1, 0] {
                    for dy in [-1, 0] {
                        for dx in [-1, 0] {
                            any |= occ(x + dx, y + dy, z + dz);
                        }
                    }
                }
                v += any as i64;
                // edges leaving (x, y, z) in +x, +y, +z: any of the four cubes around
                let around = |a: [i64; 2], b: [i64; 2], cube: &dyn Fn(i64, i64) -> bool| {
                    a.iter().any(|&p| b.iter().any(|&q| cube(p, q)))
                };
                e += around([-1, 0], [-1, 0], &|p, q| occ(x, y + p, z + q)) as i64;
                e += around([-1, 0], [-1, 0], &|p, q| occ(x + p, y, z + q)) as i64;
                e += around([-1, 0], [-1, 0], &|p, q| occ(x + p, y + q, z)) as i64;
                // squares with min corner (x, y, z): either of the two cubes
                f += (occ(x, y, z) || occ(x, y, z - 1)) as i64; // xy
                f += (occ(x, y, z) || occ(x, y - 1, z)) as i64; // xz
                f += (occ(x, y, z) || occ(x - 1, y, z)) as i64; // yz
                c += occ(x, y, z) as i64;
            }
        }
    }
    v - e + f - c
}

/// Outcome of checking ∂1∘∂2 = 0 after matching index-1 generators of the
/// two passes by vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainDiagnostic {
    /// Generators matched; whether the composition vanished.
    Checked { zero: bool },
    /// The two passes disagree on which vertices are index-1 points.
    Unidentified { unmatched: usize },
}

impl ChainDiagnostic {
    pub fn is_ok(&self) -> bool {
        matches!(self, ChainDiagnostic::Checked { zero: true })
    }
}

pub fn chain_diagnostic(sweep: &SweepResult, dual: &DualResult) -> Result<ChainDiagnostic> {
    let key = |v: Vertex, double: bool| (v, double);
    let f_rows: HashMap<(Vertex, bool), usize> =
        sweep.c1.iter().map(|p| (key(p.vertex, p.is_double), p.ordinal)).collect();
    let mut perm = vec![usize::MAX; dual.c1.len()];
    let mut unmatched = 0;
    for p in &dual.c1 {
        match f_rows.get(&key(p.vertex, p.is_double)) {
            Some(&row) => perm[p.ordinal] = row,
            None => unmatched += 1,
        }
    }
    if unmatched > 0 || dual.c1.len() != sweep.c1.len() {
        return Ok(ChainDiagnostic::Unidentified {
            unmatched: unmatched.max(sweep.c1.len().abs_diff(dual.c1.len())),
        });
    }
    let mut d2 = Gf2Matrix::zeros(sweep.c1.len(), dual.c2_dim());
    for (h_row, &f_row) in perm.iter().enumerate() {
        for c in dual.d2.row_ones(h_row) {
            d2.set(f_row, c, true);
        }
    }
    let product = sweep.d1.transpose().multiply(&d2)?;
    Ok(ChainDiagnostic::Checked { zero: product.is_zero() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Run the unstacking construction first.
    pub preprocess: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self { preprocess: true }
    }
}

/// Everything the pipeline produced for one body.
#[derive(Clone, Debug)]
pub struct Computation {
    /// The body the sweeps ran on.
    pub body: VoxelGrid,
    pub preprocess: Option<PreprocessReport>,
    pub sweep: SweepResult,
    pub dual: DualResult,
    pub report: BettiReport,
}

impl Computation {
    /// `x,y,z,class,is_double,pass` for every critical point of both passes,
    /// in the frame of the swept body. Complement points carry their class
    /// for the descending pass.
    pub fn critical_csv(&self) -> String {
        let mut out = String::from("x,y,z,class,is_double,pass\n");
        let mut row = |p: &CriticalPoint, pass: &str| {
            let [x, y, z] = p.vertex;
            out.push_str(&format!("{x},{y},{z},{},{},{pass}\n", p.class, p.is_double as u8));
        };
        for p in self.sweep.c0.iter().chain(&self.sweep.c1) {
            row(p, "f");
        }
        let back = |p: &CriticalPoint| CriticalPoint { vertex: self.body.reflect_vertex(p.vertex), ..*p };
        for p in self.dual.pass.c0.iter().map(back).chain(self.dual.c1.iter().copied()) {
            row(&p, "h");
        }
        out
    }
}

/// Preprocess (optionally), run both passes concurrently, take ranks.
pub fn compute(grid: &VoxelGrid, options: Options) -> Result<Computation> {
    let t0 = Instant::now();
    let (body, pre) = if options.preprocess {
        let (b, r) = preprocess(grid);
        (b, Some(r))
    } else {
        (grid.clone(), None)
    };
    let t1 = Instant::now();
    let (f_pass, h_pass) = std::thread::scope(|s| {
        let h = s.spawn(|| dual_sweep(&body));
        let f = sweep(&body);
        (f, h.join().expect("dual sweep panicked"))
    });
    let (f_pass, h_pass) = (f_pass?, h_pass?);
    let t2 = Instant::now();
    let mut report = betti(&f_pass, &h_pass)?;
    let t3 = Instant::now();
    report.timing = Timing {
        preprocess: t1 - t0,
        sweeps: t2 - t1,
        rank: t3 - t2,
    };
    Ok(Computation {
        body,
        preprocess: pre,
        sweep: f_pass,
        dual: h_pass,
        report,
    })
}

/// Betti numbers of a body with default options.
pub fn betti_numbers(grid: &VoxelGrid) -> Result<Betti> {
    Ok(compute(grid, Options::default())?.report.betti)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::CubicalChainComplex;
    use crate::shapes::{generate, random_grid, ShapeSpec};

    fn triple(spec: ShapeSpec) -> (usize, usize, usize, i64) {
        let r = compute(&generate(&spec).unwrap(), Options::default()).unwrap().report;
        (r.betti.b0, r.betti.b1, r.betti.b2, r.chi)
    }

    #[test]
    fn golden_triples() {
        assert_eq!(triple(ShapeSpec::SolidBox { dims: [1, 1, 1] }), (1, 0, 0, 1));
        assert_eq!(triple(ShapeSpec::SolidBox { dims: [3, 2, 4] }), (1, 0, 0, 1));
        assert_eq!(triple(ShapeSpec::shell()), (1, 0, 1, 2));
        assert_eq!(triple(ShapeSpec::ring()), (1, 1, 0, 0));
        assert_eq!(triple(ShapeSpec::two_components()), (2, 0, 0, 2));
    }

    #[test]
    fn empty_body_reports_zero() {
        let r = compute(&VoxelGrid::new([2, 2, 2]).unwrap(), Options::default()).unwrap().report;
        assert_eq!(r.betti, Betti::default());
        assert_eq!((r.c0, r.c1, r.c2, r.n_c), (0, 0, 0, 1));
    }

    #[test]
    fn euler_examples() {
        let one = VoxelGrid::from_cubes([1, 1, 1], [[0, 0, 0]]).unwrap();
        assert_eq!(euler_cell_count(&one), 1);
        let two = VoxelGrid::from_cubes([3, 3, 3], [[0, 0, 0], [2, 2, 2]]).unwrap();
        assert_eq!(euler_cell_count(&two), 2);
        assert_eq!(euler_cell_count(&generate(&ShapeSpec::shell()).unwrap()), 2);
        assert_eq!(euler_cell_count(&generate(&ShapeSpec::ring()).unwrap()), 0);
    }

    #[test]
    fn euler_matches_cell_enumeration() {
        for seed in 0..20 {
            let g = random_grid([5, 4, 6], 0.45, seed).unwrap();
            let complex = CubicalChainComplex::new(&g).unwrap();
            assert_eq!(euler_cell_count(&g), complex.euler_characteristic());
        }
    }

    #[test]
    fn morse_equality_on_random_bodies() {
        for seed in 0..30 {
            let g = random_grid([4, 4, 4], 0.5, seed).unwrap();
            let c = compute(&g, Options::default()).unwrap();
            let alternating = c.report.c0 as i64 - c.report.c1 as i64 + c.report.c2 as i64;
            assert_eq!(alternating, euler_cell_count(&c.body), "seed {seed}");
        }
    }

    #[test]
    fn pass_mismatch_is_an_error() {
        let g = generate(&ShapeSpec::ring()).unwrap();
        let c = compute(&g, Options::default()).unwrap();
        let mut dual = c.dual.clone();
        dual.c1.pop();
        assert!(matches!(betti(&c.sweep, &dual), Err(Error::PassMismatch { .. })));
    }

    #[test]
    fn chain_diagnostic_on_golden_shapes() {
        for spec in [ShapeSpec::shell(), ShapeSpec::ring(), ShapeSpec::two_components()] {
            let c = compute(&generate(&spec).unwrap(), Options::default()).unwrap();
            assert_eq!(chain_diagnostic(&c.sweep, &c.dual).unwrap(), ChainDiagnostic::Checked { zero: true });
        }
    }

    #[test]
    fn critical_csv_of_single_cube() {
        let g = VoxelGrid::from_cubes([1, 1, 1], [[0, 0, 0]]).unwrap();
        let csv = compute(&g, Options::default()).unwrap().critical_csv();
        assert_eq!(csv, "x,y,z,class,is_double,pass\n2,2,2,index0,0,f\n5,5,5,index0,0,h\n");
    }
}
