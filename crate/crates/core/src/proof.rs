//! Constructive extraction of homomorphic `C_10` images under the codegree
//! hypothesis `δ₂(H) ≥ (1/3 + ε)n`.
//!
//! The argument runs through K4⁻ copies: every edge lies in one, two K4⁻ that
//! make a pair both an apex pair and a base pair yield a closed tight 10-walk,
//! and so do two K4⁻ that orient a pair both ways. Each step is exposed on its
//! own and [`prove_pipeline`] chains them, falling back to direct search.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{sort3, Hypergraph3, VertexId};
use crate::search::{
    apex_witness, base_witness, classify_pairs, digraph_two_cycles, find_closed_tight_walk,
    verify_walk, K4MinusCert, PairClassification, TightWalkCert,
};

/// The slack `ε` above one third, an exact rational in `(0, 2/3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Epsilon(Ratio<u64>);

impl Epsilon {
    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::invalid("epsilon denominator must be positive"));
        }
        let r = Ratio::new(numer, denom);
        if numer == 0 || r >= Ratio::new(2, 3) {
            return Err(Error::invalid(format!(
                "epsilon must lie strictly between 0 and 2/3, got {numer}/{denom}"
            )));
        }
        Ok(Self(r))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    /// `⌈(1/3 + ε) n⌉`, computed exactly.
    pub fn threshold(&self, n: usize) -> usize {
        let eps = Ratio::new(self.numer() as u128, self.denom() as u128);
        let t = (Ratio::new(1u128, 3) + eps) * Ratio::from_integer(n as u128);
        t.ceil().to_integer() as usize
    }
}

impl FromStr for Epsilon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s.split_once('/').unwrap_or((s, "1"));
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::invalid(format!("epsilon must look like P/Q, got {s:?}")))
        };
        Self::new(parse(p)?, parse(q)?)
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

/// Checks `δ₂(H) ≥ ⌈(1/3 + ε)n⌉`, reporting the least worst pair otherwise.
pub fn check_hypothesis(h: &Hypergraph3, eps: Epsilon) -> Result<()> {
    let threshold = eps.threshold(h.n());
    match h.worst_pair() {
        Some((u, v, d)) if d < threshold => Err(Error::HypothesisNotMet {
            pair: (u, v),
            codegree: d,
            threshold,
        }),
        Some(_) => Ok(()),
        None => Err(Error::invalid("the hypothesis needs at least two vertices")),
    }
}

/// A K4⁻ containing the edge `e`.
///
/// With `e = xyz` the three codegrees sum to more than `n`, so some vertex
/// `v` outside `e` lies in two of `N(xy)`, `N(xz)`, `N(yz)`; the vertex shared
/// by those two pairs is the apex. Vertices are scanned in ascending order
/// and the pairs in the order `(xy, xz)`, `(xy, yz)`, `(xz, yz)`.
pub fn claim1_witness(h: &Hypergraph3, e: [VertexId; 3], eps: Epsilon) -> Result<K4MinusCert> {
    check_hypothesis(h, eps)?;
    let [x, y, z] = sort3(e);
    if !h.contains(&[x, y, z]) {
        return Err(Error::MissingEdge([x, y, z]));
    }
    for v in (0..h.n()).filter(|v| ![x, y, z].contains(v)) {
        let (in_xy, in_xz, in_yz) = (
            h.has_edge(x, y, v),
            h.has_edge(x, z, v),
            h.has_edge(y, z, v),
        );
        let found = if in_xy && in_xz {
            Some((x, [y, z, v]))
        } else if in_xy && in_yz {
            Some((y, [x, z, v]))
        } else if in_xz && in_yz {
            Some((z, [x, y, v]))
        } else {
            None
        };
        if let Some((apex, base)) = found {
            return K4MinusCert::new(apex, base);
        }
    }
    Err(Error::SoundnessAlarm(format!(
        "edge {x} {y} {z} lies in no K4- although the codegree hypothesis holds"
    )))
}

fn require_valid(h: &Hypergraph3, k: &K4MinusCert, name: &str) -> Result<()> {
    if k.is_valid_in(h) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{name} = {k:?} is not a K4- of the host"
        )))
    }
}

fn others(base: [VertexId; 3], drop: &[VertexId]) -> Vec<VertexId> {
    base.into_iter().filter(|v| !drop.contains(v)).collect()
}

fn verified(h: &Hypergraph3, seq: Vec<VertexId>) -> Result<TightWalkCert> {
    let cert = TightWalkCert::new(seq)?;
    match verify_walk(h, &cert) {
        crate::search::WalkVerdict::Valid => Ok(cert),
        crate::search::WalkVerdict::Failed { position, triple } => Err(Error::SoundnessAlarm(
            format!("gadget walk {cert} fails at position {position} with {triple:?}"),
        )),
    }
}

/// A closed tight 10-walk from a pair `uv` that is both an apex pair and a
/// base pair.
///
/// `k` has apex `v` and contains `u`, with `V(k) = {u, v, x, y}`; `kp`
/// contains `u, v` with apex `a` outside them, `V(kp) = {u, v, a, b}`. The
/// walk is `(v, u, a, b, v, a, u, v, x, y)`. When several choices of `u` fit,
/// the least is taken.
pub fn claim2_gadget(h: &Hypergraph3, k: &K4MinusCert, kp: &K4MinusCert) -> Result<TightWalkCert> {
    require_valid(h, k, "K")?;
    require_valid(h, kp, "K'")?;
    let v = k.apex;
    let a = kp.apex;
    if !kp.base.contains(&v) {
        return Err(Error::Precondition(format!(
            "the apex {v} of K must be a base vertex of K'"
        )));
    }
    let u = k
        .base
        .into_iter()
        .find(|w| kp.base.contains(w))
        .ok_or_else(|| Error::Precondition("K and K' share no base vertex u".into()))?;
    let xy = others(k.base, &[u]);
    let b = others(kp.base, &[u, v])[0];
    verified(h, vec![v, u, a, b, v, a, u, v, xy[0], xy[1]])
}

/// A closed tight 10-walk from a 2-cycle `a -> x -> a` of the apex digraph.
///
/// `k` has apex `a`, `V(k) = {a, x, b, c}`; `kp` has apex `x`,
/// `V(kp) = {a, x, y, z}`. The walk is `(x, a, y, x, z, a, x, b, a, c)`.
pub fn claim3_gadget(h: &Hypergraph3, k: &K4MinusCert, kp: &K4MinusCert) -> Result<TightWalkCert> {
    require_valid(h, k, "K")?;
    require_valid(h, kp, "K'")?;
    let a = k.apex;
    let x = kp.apex;
    if !k.base.contains(&x) || !kp.base.contains(&a) {
        return Err(Error::Precondition(format!(
            "K (apex {a}) must contain {x} and K' (apex {x}) must contain {a}"
        )));
    }
    let bc = others(k.base, &[x]);
    let yz = others(kp.base, &[a]);
    verified(h, vec![x, a, yz[0], x, yz[1], a, x, bc[0], a, bc[1]])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Implication {
    /// `d_B(v) > 0 ⇒ d⁺_D(v) ≥ t`
    BaseImpliesOut,
    /// `d⁺_D(v) > 0 ⇒ d_B(v) ≥ t`
    OutImpliesBase,
    /// `d⁻_D(v) > 0 ⇒ d⁻_D(v) ≥ t`
    InImpliesIn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Claim4Violation {
    pub vertex: VertexId,
    pub implication: Implication,
    /// The degree that fell short of the threshold.
    pub observed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim4Report {
    pub threshold: usize,
    pub hypothesis_met: bool,
    /// Whether the host has no closed tight 10-walk; only computed when the
    /// hypothesis holds and some implication fails.
    pub hom_c10_free: Option<bool>,
    pub violations: Vec<Claim4Violation>,
}

impl Claim4Report {
    /// A failed implication on a hom-C10-free host meeting the hypothesis.
    pub fn is_alarm(&self) -> bool {
        self.hypothesis_met && self.hom_c10_free == Some(true) && !self.violations.is_empty()
    }
}

/// Evaluates the three degree implications at every vertex.
pub fn claim4_check(h: &Hypergraph3, pc: &PairClassification, eps: Epsilon) -> Claim4Report {
    let t = eps.threshold(h.n());
    let mut violations = Vec::new();
    for v in 0..pc.n() {
        let (db, dout, din) = (pc.base_degree(v), pc.out_degree(v), pc.in_degree(v));
        let checks = [
            (db > 0 && dout < t, Implication::BaseImpliesOut, dout),
            (dout > 0 && db < t, Implication::OutImpliesBase, db),
            (din > 0 && din < t, Implication::InImpliesIn, din),
        ];
        violations.extend(
            checks
                .into_iter()
                .filter(|c| c.0)
                .map(|(_, implication, observed)| Claim4Violation {
                    vertex: v,
                    implication,
                    observed,
                }),
        );
    }
    let hypothesis_met = check_hypothesis(h, eps).is_ok();
    let hom_c10_free = (hypothesis_met && !violations.is_empty()).then(|| {
        find_closed_tight_walk(h, 10)
            .map(|w| w.is_none())
            .unwrap_or(false)
    });
    Claim4Report {
        threshold: t,
        hypothesis_met,
        hom_c10_free,
        violations,
    }
}

/// Least vertex with positive base degree, out-degree and in-degree.
pub fn find_vstar(pc: &PairClassification) -> Option<VertexId> {
    (0..pc.n()).find(|&v| pc.base_degree(v) > 0 && pc.out_degree(v) > 0 && pc.in_degree(v) > 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// A pair that is both an apex pair and a base pair.
    Claim2,
    /// A 2-cycle in the apex digraph.
    Claim3,
    /// Direct search for a closed tight 10-walk.
    Direct,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Claim2 => "claim2",
            Provenance::Claim3 => "claim3",
            Provenance::Direct => "direct",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PipelineOutcome {
    WalkFound {
        cert: TightWalkCert,
        provenance: Provenance,
    },
    HypothesisNotMet {
        pair: Option<(VertexId, VertexId)>,
        codegree: usize,
        threshold: usize,
    },
    /// The hypothesis holds yet no closed tight 10-walk exists.
    TheoremViolation { classification: PairClassification },
}

impl PipelineOutcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineOutcome::WalkFound { .. } => 0,
            PipelineOutcome::HypothesisNotMet { .. } => 1,
            PipelineOutcome::TheoremViolation { .. } => 3,
        }
    }
}

/// JSON form of a walk certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    #[serde(rename = "type")]
    pub kind: String,
    pub length: usize,
    pub vertices: Vec<VertexId>,
    pub provenance: Provenance,
}

impl CertificateFile {
    pub fn new(cert: &TightWalkCert, provenance: Provenance) -> Self {
        Self {
            kind: "tight_walk".into(),
            length: cert.len(),
            vertices: cert.vertices().to_vec(),
            provenance,
        }
    }
}

fn gadget_from_conflict(h: &Hypergraph3, pc: &PairClassification) -> Option<TightWalkCert> {
    pc.conflicting_pairs().into_iter().find_map(|(p, q)| {
        let (u, v) = if pc.has_arc(p, q) { (p, q) } else { (q, p) };
        let k = apex_witness(h, u, v)?;
        let kp = base_witness(h, u, v)?;
        claim2_gadget(h, &k, &kp).ok()
    })
}

fn gadget_from_two_cycle(h: &Hypergraph3, pc: &PairClassification) -> Option<TightWalkCert> {
    digraph_two_cycles(pc).into_iter().find_map(|(a, x)| {
        let k = apex_witness(h, x, a)?;
        let kp = apex_witness(h, a, x)?;
        claim3_gadget(h, &k, &kp).ok()
    })
}

/// Runs the argument on `h`: hypothesis check, then a Claim-2 gadget, then a
/// Claim-3 gadget, then direct search for a closed tight 10-walk.
pub fn prove_pipeline(h: &Hypergraph3, eps: Epsilon) -> PipelineOutcome {
    let threshold = eps.threshold(h.n());
    match h.worst_pair() {
        Some((u, v, d)) if d < threshold => {
            return PipelineOutcome::HypothesisNotMet {
                pair: Some((u, v)),
                codegree: d,
                threshold,
            }
        }
        None => {
            return PipelineOutcome::HypothesisNotMet {
                pair: None,
                codegree: 0,
                threshold,
            }
        }
        Some(_) => {}
    }

    let pc = classify_pairs(h);
    let found = gadget_from_conflict(h, &pc)
        .map(|c| (c, Provenance::Claim2))
        .or_else(|| gadget_from_two_cycle(h, &pc).map(|c| (c, Provenance::Claim3)))
        .or_else(|| {
            find_closed_tight_walk(h, 10)
                .ok()
                .flatten()
                .map(|c| (c, Provenance::Direct))
        });
    match found {
        Some((cert, provenance)) if verify_walk(h, &cert).is_valid() => {
            PipelineOutcome::WalkFound { cert, provenance }
        }
        _ => PipelineOutcome::TheoremViolation { classification: pc },
    }
}
