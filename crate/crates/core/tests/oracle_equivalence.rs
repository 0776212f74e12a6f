use cubetti::morse::{chain_diagnostic, compute, euler_cell_count, ChainDiagnostic, Options};
use cubetti::oracle::{betti_bruteforce, components_union_find};
use cubetti::shapes::random_grid;

#[test]
fn morse_matches_bruteforce_on_random_bodies() {
    let (mut unidentified, mut nonzero) = (0, 0);
    for seed in 0..200u64 {
        let density = [0.2, 0.5, 0.8][seed as usize % 3];
        let n = 2 + seed as usize % 5;
        let g = random_grid([n, n + 1, n.max(3) - 1], density, seed).unwrap();
        let c = compute(&g, Options::default()).unwrap();
        let brute = betti_bruteforce(&c.body).unwrap();
        assert_eq!(c.report.betti, brute.betti, "seed {seed} density {density}");
        let alt = c.report.c0 as i64 - c.report.c1 as i64 + c.report.c2 as i64;
        assert_eq!(alt, euler_cell_count(&c.body), "seed {seed}");
        assert_eq!(
            c.report.betti.b2 + 1,
            components_union_find(&c.body.complement()),
            "seed {seed}"
        );
        match chain_diagnostic(&c.sweep, &c.dual).unwrap() {
            ChainDiagnostic::Checked { zero } => nonzero += !zero as usize,
            ChainDiagnostic::Unidentified { .. } => unidentified += 1,
        }
    }
    eprintln!("chain diagnostic warnings: {nonzero} nonzero, {unidentified} unidentified, of 200");
}
