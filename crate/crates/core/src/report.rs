//! Runs every applicable realization of E for a singularity and compares them.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::decimal;
use crate::error::Result;
use crate::graph::{ade_graph, hirzebruch_jung, AdeKind, ResolutionGraph};
use crate::group::FiniteAbelianGroup;
use crate::lattice::Lattice;
use crate::link::{brieskorn_h1_order, lens_space_h1, link_from_plumbing, LinkHomology};
use crate::monodromy::{brieskorn_pham_operator, coxeter_operator, MonodromyOperator};
use crate::spec::{parse_error, SingularitySpec};

/// The three independent ways of computing E, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    ResolutionLattice,
    LinkTopology,
    Monodromy,
}

impl Route {
    pub const ALL: [Route; 3] = [
        Route::ResolutionLattice,
        Route::LinkTopology,
        Route::Monodromy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::ResolutionLattice => "resolution_lattice",
            Route::LinkTopology => "link_topology",
            Route::Monodromy => "monodromy",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What one route produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Realization {
    Group {
        group: FiniteAbelianGroup,
        note: String,
    },
    /// Only the order of E is known along this route.
    Order {
        #[serde(with = "decimal::single")]
        order: BigInt,
        note: String,
    },
    NotApplicable {
        reason: String,
    },
}

impl Realization {
    pub fn order(&self) -> Option<&BigInt> {
        match self {
            Realization::Group { group, .. } => Some(group.order()),
            Realization::Order { order, .. } => Some(order),
            Realization::NotApplicable { .. } => None,
        }
    }

    pub fn group(&self) -> Option<&FiniteAbelianGroup> {
        match self {
            Realization::Group { group, .. } => Some(group),
            _ => None,
        }
    }

    pub fn is_applicable(&self) -> bool {
        !matches!(self, Realization::NotApplicable { .. })
    }

    /// Short value rendering: the group, `order N`, or `n/a`.
    pub fn value_label(&self) -> String {
        match self {
            Realization::Group { group, .. } => group.to_string(),
            Realization::Order { order, .. } => format!("order {order}"),
            Realization::NotApplicable { .. } => "n/a".to_string(),
        }
    }

    fn note(&self) -> &str {
        match self {
            Realization::Group { note, .. } | Realization::Order { note, .. } => note,
            Realization::NotApplicable { reason } => reason,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// At least two routes produced groups; all groups are isomorphic and all
    /// order-only values agree with them.
    Compatible,
    /// Fewer than two group-valued routes, but every applicable route agrees
    /// on the order.
    OrderOnlyMatch,
    Mismatch,
    /// Only one route applies; nothing to compare.
    SingleRoute,
}

impl Verdict {
    pub fn is_success(self) -> bool {
        self != Verdict::Mismatch
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Compatible => "COMPATIBLE",
            Verdict::OrderOnlyMatch => "ORDER_ONLY_MATCH",
            Verdict::Mismatch => "MISMATCH",
            Verdict::SingleRoute => "SINGLE_ROUTE",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The first pair of routes found to disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub first: Route,
    pub first_value: String,
    pub second: Route,
    pub second_value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub spec: SingularitySpec,
    pub realizations: BTreeMap<Route, Realization>,
    /// det of the intersection matrix, when the resolution route ran.
    #[serde(with = "decimal::option")]
    pub det_m: Option<BigInt>,
    /// det(T − id), when the monodromy route ran and T − id is invertible
    /// over ℚ.
    #[serde(with = "decimal::option")]
    pub det_t_minus_id: Option<BigInt>,
    /// Why |E| = |det(T − id)| was not applied, if it was not.
    pub determinant_refusal: Option<String>,
    pub flags: Vec<String>,
    pub verdict: Verdict,
    pub mismatch: Option<Mismatch>,
}

#[derive(Default)]
struct Builder {
    realizations: BTreeMap<Route, Realization>,
    det_m: Option<BigInt>,
    det_t_minus_id: Option<BigInt>,
    determinant_refusal: Option<String>,
    flags: Vec<String>,
}

impl Builder {
    fn set(&mut self, route: Route, realization: Realization) {
        self.realizations.insert(route, realization);
    }

    fn not_applicable(&mut self, route: Route, reason: &str) {
        self.set(
            route,
            Realization::NotApplicable {
                reason: reason.to_string(),
            },
        );
    }

    fn resolution(&mut self, graph: &ResolutionGraph, what: &str) -> Result<()> {
        let lattice = Lattice::new(graph.intersection_matrix())?;
        self.det_m = Some(lattice.determinant().clone());
        self.set(
            Route::ResolutionLattice,
            Realization::Group {
                group: lattice.discriminant_group(),
                note: format!("discriminant group of the {what} intersection lattice"),
            },
        );
        Ok(())
    }

    fn link(&mut self, link: LinkHomology, what: &str) {
        if !link.is_rational_homology_sphere() {
            self.flags.push(format!(
                "link is not a rational homology sphere in degree 1 (b1 = {})",
                link.h1_free_rank
            ));
        }
        self.set(
            Route::LinkTopology,
            Realization::Group {
                group: link.h2_torsion,
                note: format!("torsion of H^2(L) for {what}"),
            },
        );
    }

    fn monodromy(&mut self, op: &MonodromyOperator, what: &str) {
        let v = op.variation();
        match v.determinant_order() {
            Ok(_) => self.det_t_minus_id = Some(v.det_t_minus_id.clone()),
            Err(err) => {
                self.determinant_refusal = Some(format!("determinant route refused: {err}"));
                self.flags.push(format!(
                    "ker(T - id) has rank {}, so b1(L) = {}",
                    v.kernel_rank, v.kernel_rank
                ));
            }
        }
        self.set(
            Route::Monodromy,
            Realization::Group {
                group: v.cokernel_torsion,
                note: format!("torsion of coker(T - id), {what}, mu = {}", op.mu()),
            },
        );
    }

    fn finish(self, spec: SingularitySpec) -> ObstructionReport {
        let (verdict, mismatch) = judge(&self.realizations);
        ObstructionReport {
            spec,
            realizations: self.realizations,
            det_m: self.det_m,
            det_t_minus_id: self.det_t_minus_id,
            determinant_refusal: self.determinant_refusal,
            flags: self.flags,
            verdict,
            mismatch,
        }
    }
}

/// Compares realizations in route order: groups pairwise by invariant
/// factors, then every order against the reference order.
fn judge(realizations: &BTreeMap<Route, Realization>) -> (Verdict, Option<Mismatch>) {
    let applicable: Vec<(Route, &Realization)> = realizations
        .iter()
        .filter(|(_, r)| r.is_applicable())
        .map(|(&route, r)| (route, r))
        .collect();
    if applicable.len() <= 1 {
        return (Verdict::SingleRoute, None);
    }
    let groups: Vec<_> = applicable
        .iter()
        .filter(|(_, r)| r.group().is_some())
        .collect();
    let reference = groups.first().copied().unwrap_or(&applicable[0]);

    let mismatch = |other: &(Route, &Realization)| Mismatch {
        first: reference.0,
        first_value: reference.1.value_label(),
        second: other.0,
        second_value: other.1.value_label(),
    };
    for other in &groups[groups.len().min(1)..] {
        if other.1.group() != reference.1.group() {
            return (Verdict::Mismatch, Some(mismatch(other)));
        }
    }
    for other in &applicable {
        if other.1.order() != reference.1.order() {
            return (Verdict::Mismatch, Some(mismatch(other)));
        }
    }
    if groups.len() >= 2 {
        (Verdict::Compatible, None)
    } else {
        (Verdict::OrderOnlyMatch, None)
    }
}

/// Dispatches every route applicable to `spec` and cross-checks the results.
pub fn compute_report(spec: &SingularitySpec) -> Result<ObstructionReport> {
    let mut b = Builder::default();
    match *spec {
        SingularitySpec::Ade { kind, n } => {
            let graph = ade_graph(kind, n)?;
            b.resolution(&graph, &format!("{kind}_{n}"))?;
            match kind {
                AdeKind::A => {
                    let order = u64::from(n) + 1;
                    b.link(
                        lens_space_h1(order, 1)?,
                        &format!("the lens space L({order},1)"),
                    );
                }
                AdeKind::D | AdeKind::E => {
                    b.link(link_from_plumbing(&graph)?, "the plumbed boundary");
                }
            }
            let what = format!("Coxeter transformation of {kind}_{n}");
            b.monodromy(&coxeter_operator(kind, n)?, &what);
        }
        SingularitySpec::CyclicQuotient { n, q } => {
            let (_, graph) = hirzebruch_jung(n, q)?;
            b.resolution(&graph, "Hirzebruch-Jung chain")?;
            b.link(lens_space_h1(n, q)?, &format!("the lens space L({n},{q})"));
            b.not_applicable(
                Route::Monodromy,
                "not a hypersurface germ in the reference tables",
            );
        }
        SingularitySpec::BrieskornPham { a, b: bb, c } => {
            b.not_applicable(
                Route::ResolutionLattice,
                "no resolution graph model for Brieskorn-Pham germs",
            );
            if a.gcd(&bb) == 1 && a.gcd(&c) == 1 && bb.gcd(&c) == 1 {
                b.set(
                    Route::LinkTopology,
                    Realization::Order {
                        order: brieskorn_h1_order(a, bb, c)?,
                        note: format!("|ab+ac+bc-abc| for Sigma({a},{bb},{c})"),
                    },
                );
            } else {
                b.not_applicable(
                    Route::LinkTopology,
                    "exponents are not pairwise coprime; no closed-form link order",
                );
            }
            b.monodromy(
                &brieskorn_pham_operator(a, bb, c)?,
                "tensor product of companion matrices",
            );
        }
        SingularitySpec::Plumbing { ref graph } => {
            let link = link_from_plumbing(graph)?;
            b.resolution(graph, "plumbing graph")?;
            b.link(link, "the plumbed boundary");
            b.not_applicable(Route::Monodromy, "no monodromy model for plumbing input");
        }
    }
    Ok(b.finish(spec.clone()))
}

impl ObstructionReport {
    pub fn realization(&self, route: Route) -> Option<&Realization> {
        self.realizations.get(&route)
    }

    /// The agreed value of E: the first group-valued realization in route
    /// order, else the first order. `None` when the routes disagree.
    pub fn consensus(&self) -> Option<&Realization> {
        if self.verdict == Verdict::Mismatch {
            return None;
        }
        let mut applicable = self.realizations.values().filter(|r| r.is_applicable());
        let first = applicable.clone().next()?;
        applicable.find(|r| r.group().is_some()).or(Some(first))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(parse_error)
    }

    /// Aligned plain-text rendering.
    pub fn render_text(&self) -> String {
        let mut rows: Vec<(String, String, String)> = Vec::new();
        rows.push(("singularity".into(), self.spec.to_string(), String::new()));
        for (route, r) in &self.realizations {
            rows.push((route.name().into(), r.value_label(), r.note().to_string()));
        }
        if let Some(det) = &self.det_m {
            rows.push((
                "|det M|".into(),
                det.abs().to_string(),
                format!("det M = {det}"),
            ));
        }
        if let Some(det) = &self.det_t_minus_id {
            rows.push((
                "|det(T - id)|".into(),
                det.abs().to_string(),
                format!("det(T - id) = {det}"),
            ));
        }
        if let Some(reason) = &self.determinant_refusal {
            rows.push(("|det(T - id)|".into(), "refused".into(), reason.clone()));
        }
        rows.push(("verdict".into(), self.verdict.to_string(), String::new()));

        let w0 = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
        let w1 = rows.iter().map(|r| r.1.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (a, b, c) in rows {
            let line = format!("{a:<w0$}  {b:<w1$}  {c}");
            out.push_str(line.trim_end());
            out.push('\n');
        }
        if let Some(m) = &self.mismatch {
            let _ = writeln!(
                out,
                "mismatch: {} gives {} but {} gives {}",
                m.first, m.first_value, m.second, m.second_value
            );
        }
        for flag in &self.flags {
            let _ = writeln!(out, "note: {flag}");
        }
        out
    }
}
