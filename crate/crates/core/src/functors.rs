//! Product-level functors between classes and the end-to-end diagram check.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{Matrix, StructureTensor};
use crate::operators::{check_commuting, induce, induce_pair, OperatorWitness};
use crate::structures::{
    check, check_morphism, CheckOptions, CheckReport, HomStructure, ProductRole as R, StructureClass as C,
};

fn single(role: R, t: StructureTensor, s: &HomStructure, label: &str) -> Result<HomStructure> {
    Ok(HomStructure::single(role, t, s.twist().clone())?.with_basis(s.basis().to_vec())?.with_provenance(label))
}

fn pair(a: (R, StructureTensor), b: (R, StructureTensor), s: &HomStructure, label: &str) -> Result<HomStructure> {
    Ok(HomStructure::new(vec![a, b], s.twist().clone())?.with_basis(s.basis().to_vec())?.with_provenance(label))
}

/// `[x, y] = x∘y − y∘x` for any stored or derived role.
pub fn commutator(s: &HomStructure, role: R) -> Result<HomStructure> {
    single(R::Bracket, s.product(role)?.commutator(), s, "commutator")
}

/// Horizontal pre-Malcev product `x·y = x◀y + x▶y`.
pub fn horizontal(s: &HomStructure) -> Result<HomStructure> {
    let dot = s.tensor(R::TriLeft)?.add(s.tensor(R::TriRight)?)?;
    single(R::Dot, dot, s, "horizontal")
}

/// Vertical pre-Malcev product `x⋄y = x◀y − y▶x`, stored as `Dot`.
pub fn vertical(s: &HomStructure) -> Result<HomStructure> {
    let dot = s.tensor(R::TriLeft)?.sub(&s.tensor(R::TriRight)?.opposite())?;
    single(R::Dot, dot, s, "vertical")
}

/// Transpose: `x▶ᵗy = −y▶x`, `◀` unchanged.
pub fn transpose(s: &HomStructure) -> Result<HomStructure> {
    let right = s.tensor(R::TriRight)?.opposite().neg();
    pair((R::TriRight, right), (R::TriLeft, s.tensor(R::TriLeft)?.clone()), s, "transpose")
}

/// Composes every product with `gamma`. The twist becomes `gamma` for an
/// untwisted input and `α∘γ` otherwise.
pub fn yau_twist(s: &HomStructure, gamma: &Matrix, weak: bool) -> Result<HomStructure> {
    let report = check_morphism(gamma, s, s, weak)?;
    if !report.pass {
        let first = report.violations.first().map(|v| v.identity.clone()).unwrap_or_default();
        return Err(Error::NotAMorphism(format!("{} violations, first in {first}", report.violations.len())));
    }
    let products = s.products().map(|(r, t)| Ok((r, t.push(gamma)?))).collect::<Result<Vec<_>>>()?;
    let twist = if s.twist().is_identity() { gamma.clone() } else { s.twist().mul(gamma)? };
    Ok(HomStructure::new(products, twist)?.with_basis(s.basis().to_vec())?.with_provenance("yau-twist"))
}

/// Split directions accepted by [`quadri_split`].
pub const DIRECTIONS: [&str; 3] = ["prealt-horizontal", "prealt-vertical", "mdendriform"];

/// Two-product structures obtained from a quadri-algebra:
/// `prealt-horizontal` gives `≺ = ↖+↙`, `≻ = ↗+↘`;
/// `prealt-vertical` gives `≺ = ↗+↖`, `≻ = ↘+↙`;
/// `mdendriform` gives `a▶b = a↗b − b↙a`, `a◀b = a↘b − b↖a`.
pub fn quadri_split(s: &HomStructure, direction: &str) -> Result<HomStructure> {
    if !DIRECTIONS.contains(&direction) {
        return Err(Error::UnknownDirection(direction.to_string()));
    }
    let [nw, sw, ne, se] = [R::NW, R::SW, R::NE, R::SE].map(|r| s.tensor(r));
    let (nw, sw, ne, se) = (nw?, sw?, ne?, se?);
    let label = format!("quadri-split:{direction}");
    match direction {
        "prealt-horizontal" => pair((R::Prec, nw.add(sw)?), (R::Succ, ne.add(se)?), s, &label),
        "prealt-vertical" => pair((R::Prec, ne.add(nw)?), (R::Succ, se.add(sw)?), s, &label),
        _ => pair((R::TriRight, ne.sub(&sw.opposite())?), (R::TriLeft, se.sub(&nw.opposite())?), s, &label),
    }
}

/// Pre-Malcev product `a·b = a≻b − b≺a` of a pre-alternative structure.
pub fn prealt_to_premalcev(s: &HomStructure) -> Result<HomStructure> {
    let dot = s.tensor(R::Succ)?.sub(&s.tensor(R::Prec)?.opposite())?;
    single(R::Dot, dot, s, "prealt-to-premalcev")
}

/// Node checks, edge outcomes and path equalities of the closing diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramReport {
    /// Class check of each of the six nodes, keyed by node label.
    pub nodes: BTreeMap<String, CheckReport>,
    /// Constructions and path equalities, in evaluation order.
    pub edges: Vec<(String, bool)>,
    /// Every pair of paths landing on the same node gave identical tensors.
    pub paths_equal: bool,
}

impl DiagramReport {
    pub fn pass(&self) -> bool {
        self.paths_equal && self.nodes.values().all(|r| r.pass) && self.edges.iter().all(|e| e.1)
    }
}

fn same_tensors(a: &HomStructure, b: &HomStructure) -> bool {
    a.twist() == b.twist() && a.products().eq(b.products())
}

/// Builds the six nodes of the alternative / Malcev diagram from `alt` and a
/// commuting pair of weight-zero Rota-Baxter operators, checks each node and
/// compares every pair of paths that should agree.
pub fn verify_diagram(alt: &HomStructure, r1: &OperatorWitness, r2: &OperatorWitness) -> Result<DiagramReport> {
    if !check_commuting(r1, r2)? {
        return Err(Error::NotCommuting);
    }
    let opts = CheckOptions::default();
    let malcev = commutator(alt, R::Star)?;
    let ((prealt, quadri), (mdend_pair, premalcev_rb)) = rayon::join(
        || (induce(alt, r1, "alternative-to-prealt-rb"), induce_pair(alt, r1, r2, "alternative-pair-to-quadri")),
        || (induce_pair(&malcev, r1, r2, "malcev-pair-to-mdendriform"), induce(&malcev, r1, "malcev-to-premalcev-rb")),
    );
    let (prealt, quadri, mdend_pair, premalcev_rb) = (prealt?, quadri?, mdend_pair?, premalcev_rb?);
    let premalcev = prealt_to_premalcev(&prealt)?;
    let mdend = quadri_split(&quadri, "mdendriform")?;

    let mut nodes = BTreeMap::new();
    let mut edges = Vec::new();
    for (label, s, class) in [
        ("alternative", alt, C::HomAlternative),
        ("pre-alternative", &prealt, C::HomPreAlternative),
        ("quadri", &quadri, C::HomAltQuadri),
        ("malcev", &malcev, C::HomMalcev),
        ("pre-malcev", &premalcev, C::HomPreMalcev),
        ("m-dendriform", &mdend, C::HomMDendriform),
    ] {
        nodes.insert(label.to_string(), check(s, class, opts)?);
    }
    edges.push(("quadri-split:prealt-horizontal".into(), {
        let h = quadri_split(&quadri, "prealt-horizontal")?;
        check(&h, C::HomPreAlternative, opts)?.pass
    }));
    edges.push(("horizontal".into(), check(&horizontal(&mdend)?, C::HomPreMalcev, opts)?.pass));

    let mut equal = Vec::new();
    equal.push(("m-dendriform: quadri split = Malcev pair".to_string(), same_tensors(&mdend, &mdend_pair)));
    equal.push(("pre-malcev: pre-alternative = Malcev RB".to_string(), same_tensors(&premalcev, &premalcev_rb)));
    let h = prealt_to_premalcev(&quadri_split(&quadri, "prealt-horizontal")?)?;
    equal.push(("pre-malcev: horizontal of M-dendriform = quadri horizontal".to_string(), {
        let hm = horizontal(&mdend)?;
        same_tensors(&hm, &h)
    }));
    equal.push(("malcev: commutator of pre-Malcev = commutator of pre-alternative".to_string(), {
        let a = commutator(&premalcev, R::Dot)?;
        let b = commutator(&prealt, R::Star)?;
        same_tensors(&a, &b)
    }));
    equal.push(("m-dendriform: pre-Malcev RB = quadri split".to_string(), {
        match induce(&premalcev, r2, "premalcev-to-mdendriform-rb") {
            Ok(m) => same_tensors(&m, &mdend),
            Err(Error::OperatorInvalid(_)) => false,
            Err(e) => return Err(e),
        }
    }));
    let paths_equal = equal.iter().all(|e| e.1);
    edges.extend(equal);
    Ok(DiagramReport { nodes, edges, paths_equal })
}
