//! Benchmark fixtures shared by the criterion targets.

use mbtd_core::constructions::*;
use mbtd_core::{Graph, SolveSpec};

/// Construction instances with the invariant worth timing on each.
pub fn construction_fixtures() -> Vec<(String, Graph, SolveSpec)> {
    let mut out = Vec::new();
    let mut add = |c: mbtd_core::Result<Construction>, spec: SolveSpec| {
        let c = c.expect("fixture parameters are valid");
        out.push((c.spec.to_string(), c.graph, spec));
    };
    add(gen_gl(3), SolveSpec::MBT);
    add(gen_gl_prime(2), SolveSpec::MBT);
    add(gen_gl_double_prime(2), SolveSpec::MBT_PRIME);
    add(gen_gkn(3, 4), SolveSpec::MBT);
    add(gen_g2l(4), SolveSpec::MBT);
    add(gen_gkl(3, 3), SolveSpec::MB);
    add(gen_h2l(4), SolveSpec::MBT_PRIME);
    add(gen_fkl(3, 3), SolveSpec::MBT_PRIME);
    out
}
