//! Constant matrices of the complex 3-vector (Majorana–Oppenheimer) form of
//! Maxwell's equations: the α-matrices, the six SO(3,C) generators, the
//! Cartesian → cyclic basis change and the symbol dictionary that maps the
//! DKP operator onto the 3-vector one.
//!
//! Matrices act on column 4-vectors `(Ψ₀, Ψ₁, Ψ₂, Ψ₃)`; the physical field
//! lives in components 1..3 and `Ψ₀ ≡ 0`.

mod exact;
mod matrix;

pub use exact::{Exact, Surd};
pub use matrix::{apply4, ExactMatrix, Matrix3C, Matrix4C};

use serde::Serialize;

/// Which 3-vector basis the matrices are written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BasisTag {
    Cartesian,
    /// Basis in which `S³` is diagonal.
    Cyclic,
}

/// Cartesian SO(3) generators, `(τ_k)_{ij} = −ε_{kij}`.
pub fn cartesian_taus() -> [Matrix3C; 3] {
    [
        Matrix3C::integer([[0, 0, 0], [0, 0, -1], [0, 1, 0]]),
        Matrix3C::integer([[0, 0, 1], [0, 0, 0], [-1, 0, 0]]),
        Matrix3C::integer([[0, -1, 0], [1, 0, 0], [0, 0, 0]]),
    ]
}

/// The unitary basis change `U`, its inverse, and the bordered `U₄ = diag(1, U)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicTransform {
    pub u4: Matrix4C,
    pub u4_inv: Matrix4C,
    pub u: Matrix3C,
    pub u_inv: Matrix3C,
}

impl CyclicTransform {
    /// `U₄ X U₄⁻¹`
    pub fn conjugate(&self, x: &Matrix4C) -> Matrix4C {
        self.u4 * *x * self.u4_inv
    }

    /// `U τ U⁻¹`
    pub fn conjugate3(&self, x: &Matrix3C) -> Matrix3C {
        self.u * *x * self.u_inv
    }
}

pub fn cyclic_transform() -> CyclicTransform {
    let s = Exact::gaussian_over_sqrt2;
    let one = Exact::one();
    let zero = Exact::zero();
    let u = Matrix3C {
        entries: [
            [s(-1, 0), s(0, 1), zero],
            [zero, zero, one],
            [s(1, 0), s(0, 1), zero],
        ],
    };
    let u_inv = Matrix3C {
        entries: [
            [s(-1, 0), zero, s(1, 0)],
            [s(0, -1), zero, s(0, -1)],
            [zero, one, zero],
        ],
    };
    CyclicTransform {
        u4: Matrix4C::bordered(one, &u),
        u4_inv: Matrix4C::bordered(one, &u_inv),
        u,
        u_inv,
    }
}

fn cartesian_alphas() -> [Matrix4C; 4] {
    [
        Matrix4C::identity().scale(-Exact::i()),
        Matrix4C::integer([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]),
        Matrix4C::integer([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]),
        Matrix4C::integer([[0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]]),
    ]
}

/// `(α⁰, α¹, α², α³)` with `α⁰ = −i·I`.
pub fn mo_alphas(basis: BasisTag) -> [Matrix4C; 4] {
    let cart = cartesian_alphas();
    match basis {
        BasisTag::Cartesian => cart,
        BasisTag::Cyclic => {
            let t = cyclic_transform();
            cart.map(|a| t.conjugate(&a))
        }
    }
}

/// The SO(3,C) generators: rotations `S^k = j^{23}, j^{31}, j^{12}` and
/// boosts `N^k = j^{0k} = i S^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Generators {
    pub s: [Matrix4C; 3],
    pub n: [Matrix4C; 3],
}

pub fn so3c_generators(basis: BasisTag) -> Generators {
    let zero = Exact::zero();
    let s = match basis {
        BasisTag::Cartesian => cartesian_taus().map(|t| Matrix4C::bordered(zero, &t)),
        BasisTag::Cyclic => {
            let tr = cyclic_transform();
            cartesian_taus().map(|t| Matrix4C::bordered(zero, &tr.conjugate3(&t)))
        }
    };
    let n = s.map(|m| m.scale(Exact::i()));
    Generators { s, n }
}

/// Spatial index carried by a dictionary entry: either the running index `k`
/// or a fixed value in `1..=3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Index {
    K,
    Fixed(usize),
}

/// Operators appearing in the 10-component DKP equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DkpSymbol {
    /// `iβ⁰`
    IBeta0,
    /// `iβᵏ`
    IBeta(Index),
    /// `j^{ab}` with `a < b` or the ordered pair used in the equation.
    J(usize, Index),
}

/// Operators of the 3-vector equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MoOperator {
    Identity,
    Alpha(Index),
    S(Index),
}

/// One line of the DKP → 3-vector dictionary: `from ⟹ coefficient · to`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Substitution {
    pub from: DkpSymbol,
    pub coefficient: (i64, i64),
    pub to: MoOperator,
    pub label: &'static str,
}

impl Substitution {
    pub fn coefficient(&self) -> Exact {
        Exact::gaussian(self.coefficient.0, self.coefficient.1)
    }

    /// The 3-vector image as a matrix, resolving a running index to `k`.
    pub fn image(&self, basis: BasisTag, k: usize) -> Matrix4C {
        let resolve = |idx: Index| match idx {
            Index::K => k,
            Index::Fixed(v) => v,
        };
        let op = match self.to {
            MoOperator::Identity => Matrix4C::identity(),
            MoOperator::Alpha(idx) => mo_alphas(basis)[resolve(idx)],
            MoOperator::S(idx) => so3c_generators(basis).s[resolve(idx) - 1],
        };
        op.scale(self.coefficient())
    }
}

/// The formal changes turning the massive DKP operator into the 3-vector one.
pub fn dkp_substitution_table() -> Vec<Substitution> {
    vec![
        Substitution {
            from: DkpSymbol::IBeta0,
            coefficient: (0, -1),
            to: MoOperator::Identity,
            label: "iβ⁰ ⟹ −i",
        },
        Substitution {
            from: DkpSymbol::IBeta(Index::K),
            coefficient: (1, 0),
            to: MoOperator::Alpha(Index::K),
            label: "iβᵏ ⟹ αᵏ",
        },
        Substitution {
            from: DkpSymbol::J(0, Index::K),
            coefficient: (0, 1),
            to: MoOperator::S(Index::K),
            label: "j^{0k} ⟹ iSᵏ",
        },
        Substitution {
            from: DkpSymbol::J(3, Index::Fixed(1)),
            coefficient: (1, 0),
            to: MoOperator::S(Index::Fixed(2)),
            label: "j^{31} ⟹ S²",
        },
        Substitution {
            from: DkpSymbol::J(3, Index::Fixed(2)),
            coefficient: (-1, 0),
            to: MoOperator::S(Index::Fixed(1)),
            label: "j^{32} ⟹ −S¹",
        },
        Substitution {
            from: DkpSymbol::J(1, Index::Fixed(2)),
            coefficient: (1, 0),
            to: MoOperator::S(Index::Fixed(3)),
            label: "j^{12} ⟹ S³",
        },
    ]
}

/// Finds the dictionary entry for a DKP symbol; running-index entries match
/// any concrete index.
pub fn lookup_substitution(symbol: DkpSymbol) -> Option<Substitution> {
    dkp_substitution_table().into_iter().find(|s| match (s.from, symbol) {
        (DkpSymbol::IBeta0, DkpSymbol::IBeta0) => true,
        (DkpSymbol::IBeta(_), DkpSymbol::IBeta(_)) => true,
        (DkpSymbol::J(0, Index::K), DkpSymbol::J(0, _)) => true,
        (DkpSymbol::J(a, x), DkpSymbol::J(b, y)) => a == b && x == y,
        _ => false,
    })
}
