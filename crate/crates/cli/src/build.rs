use anyhow::Result;
use stabctx_core::graph::{bits, Graph};
use stabctx_core::stabilizer::{PhaseTable, StateFamily};

/// Orthogonality graph of `family`, rows split over `jobs` threads. The
/// result does not depend on `jobs`.
pub fn orthogonality_graph_parallel(family: &StateFamily, jobs: usize) -> Result<Graph> {
    let n = family.len();
    let words = bits::words(n);
    let table = PhaseTable::new(family);
    let mut rows = vec![vec![0u64; words]; n];
    let chunk = n.div_ceil(jobs.max(1)).max(1);
    std::thread::scope(|scope| {
        for (c, block) in rows.chunks_mut(chunk).enumerate() {
            let table = &table;
            scope.spawn(move || {
                for (off, row) in block.iter_mut().enumerate() {
                    let i = c * chunk + off;
                    for j in 0..n {
                        if j != i && table.orthogonal(i, j) {
                            bits::set(row, j);
                        }
                    }
                }
            });
        }
    });
    Ok(Graph::from_rows(n, rows)?.with_labels(family.labels()))
}
