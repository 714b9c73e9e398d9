use crate::depth::{
    enclosing_depth_exact, simplicial_depth, tukey_depth, tverberg_depth_exact, DEFAULT_CAP,
};
use crate::error::Result;
use crate::geom::scalar::{int, ExactScalar};
use crate::geom::{Point, PointSet};

/// The four depths at one query, and whether `ED ≤ TvD ≤ TD ≤ d·TvD`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub td: ExactScalar,
    pub tvd: ExactScalar,
    pub ed: ExactScalar,
    pub sd: ExactScalar,
    pub holds: bool,
    /// `ED / TD` when `TD > 0`.
    pub ratio: Option<ExactScalar>,
}

/// Evaluates TD, TvD, ED and SD at `(S, q)`. ED needs `d ≤ 2`.
pub fn inequality_chain_check(s: &PointSet, q: &Point) -> Result<ChainReport> {
    let td = tukey_depth(s, q)?.value;
    let tvd = tverberg_depth_exact(s, q, DEFAULT_CAP)?.value;
    let ed = enclosing_depth_exact(s, q, DEFAULT_CAP)?.value;
    let sd = simplicial_depth(s, q)?.value;
    let d = int(s.dim() as i64);
    let holds = ed <= tvd && tvd <= td && td <= &d * &tvd;
    let ratio = (td > int(0)).then(|| &ed / &td);
    Ok(ChainReport {
        td,
        tvd,
        ed,
        sd,
        holds,
        ratio,
    })
}
