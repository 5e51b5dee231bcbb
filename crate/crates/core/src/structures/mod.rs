//! Hom-structures and their identity checkers.

mod check;
pub(crate) mod identities;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use crate::error::{Error, Result};
use crate::exact::{Matrix, StructureTensor};

pub use check::{alpha_associator, check, check_morphism, hom_jacobian, hpm_expanded_residual, AssociatorKind};

/// Name of a bilinear product.
///
/// Only generator roles are ever stored in a [`HomStructure`]; the rest
/// (`Diamond`, `Vee`, `Wedge`, and combinations such as the horizontal `Dot`
/// of an M-dendriform pair) are derived on demand by [`HomStructure::product`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProductRole {
    Bracket,
    Dot,
    Diamond,
    TriRight,
    TriLeft,
    Prec,
    Succ,
    NW,
    SW,
    NE,
    SE,
    Vee,
    Wedge,
    Star,
}

impl ProductRole {
    pub const ALL: [ProductRole; 14] = [
        Self::Bracket,
        Self::Dot,
        Self::Diamond,
        Self::TriRight,
        Self::TriLeft,
        Self::Prec,
        Self::Succ,
        Self::NW,
        Self::SW,
        Self::NE,
        Self::SE,
        Self::Vee,
        Self::Wedge,
        Self::Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Bracket => "bracket",
            Self::Dot => "dot",
            Self::Diamond => "diamond",
            Self::TriRight => "tri-right",
            Self::TriLeft => "tri-left",
            Self::Prec => "prec",
            Self::Succ => "succ",
            Self::NW => "nw",
            Self::SW => "sw",
            Self::NE => "ne",
            Self::SE => "se",
            Self::Vee => "vee",
            Self::Wedge => "wedge",
            Self::Star => "star",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|r| r.name() == s).ok_or_else(|| Error::Parse(format!("unknown product role {s:?}")))
    }
}

impl fmt::Display for ProductRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Identity class a structure can be checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StructureClass {
    HomLie,
    HomMalcev,
    HomMalcevAdmissible,
    HomPreMalcev,
    HomMDendriform,
    HomAssociative,
    HomAlternative,
    HomPreAlternative,
    HomAltQuadri,
}

use ProductRole as R;

impl StructureClass {
    pub const ALL: [StructureClass; 9] = [
        Self::HomLie,
        Self::HomMalcev,
        Self::HomMalcevAdmissible,
        Self::HomPreMalcev,
        Self::HomMDendriform,
        Self::HomAssociative,
        Self::HomAlternative,
        Self::HomPreAlternative,
        Self::HomAltQuadri,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::HomLie => "hom-lie",
            Self::HomMalcev => "hom-malcev",
            Self::HomMalcevAdmissible => "hom-malcev-admissible",
            Self::HomPreMalcev => "hom-pre-malcev",
            Self::HomMDendriform => "hom-m-dendriform",
            Self::HomAssociative => "hom-associative",
            Self::HomAlternative => "hom-alternative",
            Self::HomPreAlternative => "hom-pre-alternative",
            Self::HomAltQuadri => "hom-alt-quadri",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::Parse(format!("unknown class {s:?}")))
    }

    /// Product roles a structure of this class carries.
    pub fn roles(self) -> &'static [ProductRole] {
        match self {
            Self::HomLie | Self::HomMalcev => &[R::Bracket],
            Self::HomMalcevAdmissible | Self::HomAssociative | Self::HomAlternative => &[R::Star],
            Self::HomPreMalcev => &[R::Dot],
            Self::HomMDendriform => &[R::TriRight, R::TriLeft],
            Self::HomPreAlternative => &[R::Prec, R::Succ],
            Self::HomAltQuadri => &[R::NW, R::SW, R::NE, R::SE],
        }
    }

    /// Identity ids evaluated by [`check`] (without opt-in extras).
    pub fn identity_ids(self) -> &'static [&'static str] {
        match self {
            Self::HomLie => &["SKEW", "JACOBI"],
            Self::HomMalcev | Self::HomMalcevAdmissible => &["SKEW", "HM-EXP", "HM-JAC"],
            Self::HomPreMalcev => &["HPM"],
            Self::HomMDendriform => &["MD1", "MD2", "MD3", "MD4"],
            Self::HomAssociative => &["ASSOC"],
            Self::HomAlternative => &["ALT-L", "ALT-R"],
            Self::HomPreAlternative => &["PA1", "PA2", "PA3", "PA4", "PA5", "PA6", "PA7", "PA8", "PA9", "PA10"],
            Self::HomAltQuadri => &["QA1", "QA2", "QA3", "QA4", "QA5", "QA6", "QA7", "QA8", "QA9"],
        }
    }

    /// The class whose generator roles are exactly `roles`, preferring the
    /// weakest reading (Malcev over Lie, alternative over associative).
    pub fn for_roles(roles: &[ProductRole]) -> Option<Self> {
        [
            Self::HomMalcev,
            Self::HomPreMalcev,
            Self::HomAlternative,
            Self::HomMDendriform,
            Self::HomPreAlternative,
            Self::HomAltQuadri,
        ]
        .into_iter()
        .find(|c| c.roles() == roles)
    }
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const GENERATOR_SETS: [&[ProductRole]; 6] = [
    &[R::Bracket],
    &[R::Dot],
    &[R::Star],
    &[R::TriRight, R::TriLeft],
    &[R::Prec, R::Succ],
    &[R::NW, R::SW, R::NE, R::SE],
];

/// A finite-dimensional Hom-algebra: generator products plus twist `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomStructure {
    basis: Vec<String>,
    products: BTreeMap<ProductRole, StructureTensor>,
    twist: Matrix,
    provenance: Option<String>,
}

impl HomStructure {
    pub fn new(products: Vec<(ProductRole, StructureTensor)>, twist: Matrix) -> Result<Self> {
        let dim = twist.rows();
        if !twist.is_square() {
            return Err(Error::DimensionMismatch(format!("twist is {}x{}", twist.rows(), twist.cols())));
        }
        let mut map = BTreeMap::new();
        for (role, t) in products {
            if t.dim() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "{role} tensor has dimension {}, twist has {dim}",
                    t.dim()
                )));
            }
            if map.insert(role, t).is_some() {
                return Err(Error::RoleMismatch(format!("{role} given twice")));
            }
        }
        let roles: Vec<ProductRole> = map.keys().copied().collect();
        if !GENERATOR_SETS.iter().any(|g| *g == roles.as_slice()) {
            return Err(Error::RoleMismatch(format!("product roles {} do not form a generator set", names(&roles))));
        }
        let basis = (1..=dim).map(|i| format!("e{i}")).collect();
        Ok(Self { basis, products: map, twist, provenance: None })
    }

    /// Single-product structure.
    pub fn single(role: ProductRole, t: StructureTensor, twist: Matrix) -> Result<Self> {
        Self::new(vec![(role, t)], twist)
    }

    pub fn with_basis(mut self, basis: Vec<String>) -> Result<Self> {
        if basis.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!("{} basis labels for dimension {}", basis.len(), self.dim())));
        }
        self.basis = basis;
        Ok(self)
    }

    pub fn with_provenance(mut self, p: impl Into<String>) -> Self {
        self.provenance = Some(p.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.twist.rows()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    /// Stored generator roles in canonical order.
    pub fn roles(&self) -> Vec<ProductRole> {
        self.products.keys().copied().collect()
    }

    pub fn products(&self) -> impl Iterator<Item = (ProductRole, &StructureTensor)> {
        self.products.iter().map(|(r, t)| (*r, t))
    }

    /// A stored generator.
    pub fn tensor(&self, role: ProductRole) -> Result<&StructureTensor> {
        self.products
            .get(&role)
            .ok_or_else(|| Error::RoleMismatch(format!("role {role} not present (have {})", names(&self.roles()))))
    }

    pub fn has(&self, role: ProductRole) -> bool {
        self.products.contains_key(&role)
    }

    /// A stored or derived product.
    ///
    /// Derivations: `·` = ▶+◀ and `⋄` = x◀y − y▶x for M-dendriform pairs;
    /// `≻` = ↗+↘, `≺` = ↖+↙, `∨` = ↘+↙, `∧` = ↗+↖ for quadri structures;
    /// `∗` = ≺+≻; and `[−,−]` is the commutator of `·` or `∗`.
    pub fn product(&self, role: ProductRole) -> Result<StructureTensor> {
        if let Some(t) = self.products.get(&role) {
            return Ok(t.clone());
        }
        let sum = |a: ProductRole, b: ProductRole| -> Result<StructureTensor> { self.tensor(a)?.add(self.tensor(b)?) };
        let missing = || Error::RoleMismatch(format!("role {role} cannot be derived from {}", names(&self.roles())));
        match role {
            R::Dot if self.has(R::TriRight) => sum(R::TriRight, R::TriLeft),
            R::Diamond if self.has(R::TriRight) => self.tensor(R::TriLeft)?.sub(&self.tensor(R::TriRight)?.opposite()),
            R::Succ if self.has(R::NE) => sum(R::NE, R::SE),
            R::Prec if self.has(R::NW) => sum(R::NW, R::SW),
            R::Vee if self.has(R::SE) => sum(R::SE, R::SW),
            R::Wedge if self.has(R::NE) => sum(R::NE, R::NW),
            R::Star if self.has(R::Prec) || self.has(R::NW) => self.product(R::Prec)?.add(&self.product(R::Succ)?),
            R::Bracket => {
                let base = [R::Dot, R::Star].into_iter().find_map(|r| self.product(r).ok()).ok_or_else(missing)?;
                Ok(base.commutator())
            }
            _ => Err(missing()),
        }
    }

    /// Same twist and basis, new products.
    pub fn with_products(&self, products: Vec<(ProductRole, StructureTensor)>) -> Result<Self> {
        let mut s = Self::new(products, self.twist.clone())?;
        s.basis = self.basis.clone();
        Ok(s)
    }

    /// Same products, new twist.
    pub fn with_twist(&self, twist: Matrix) -> Result<Self> {
        let mut s = Self::new(self.products.iter().map(|(r, t)| (*r, t.clone())).collect(), twist)?;
        s.basis = self.basis.clone();
        Ok(s)
    }

    /// The class implied by the stored roles.
    pub fn natural_class(&self) -> StructureClass {
        StructureClass::for_roles(&self.roles()).expect("roles validated at construction")
    }
}

pub(crate) fn names(roles: &[ProductRole]) -> String {
    let v: Vec<&str> = roles.iter().map(|r| r.name()).collect();
    format!("{{{}}}", v.join(", "))
}

/// Options for [`check`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    /// Also require `α(x∘y) = α(x)∘α(y)` for every generator (`MULT`).
    pub multiplicativity: bool,
    /// For pre-alternative structures, also require action/twist
    /// equivariance of the regular actions (`PA-EQ`).
    pub equivariance: bool,
}

/// One failing basis tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub tuple: Vec<usize>,
    pub residual: Vec<crate::exact::Rational>,
}

/// Result of an exhaustive identity sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    /// What was checked: `structure`, `representation`, `operator`, ...
    pub subject: String,
    pub class: StructureClass,
    pub pass: bool,
    /// Identity ids evaluated, in evaluation order.
    pub identities: Vec<String>,
    /// Grouped by identity in evaluation order, tuples lexicographic within.
    pub violations: Vec<Violation>,
    pub tuples_checked: u64,
    pub elapsed: Duration,
}

impl CheckReport {
    pub(crate) fn new(subject: &str, class: StructureClass) -> Self {
        Self {
            subject: subject.to_string(),
            class,
            pass: true,
            identities: Vec::new(),
            violations: Vec::new(),
            tuples_checked: 0,
            elapsed: Duration::ZERO,
        }
    }

    pub(crate) fn record(&mut self, id: &str, tuples: usize, mut found: Vec<Violation>) {
        self.identities.push(id.to_string());
        self.tuples_checked += tuples as u64;
        self.pass &= found.is_empty();
        self.violations.append(&mut found);
    }

    /// Violations of one identity.
    pub fn violations_of<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations.iter().filter(move |v| v.identity == id)
    }
}
