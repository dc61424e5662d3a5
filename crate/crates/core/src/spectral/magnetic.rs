use std::f64::consts::TAU;

use log::warn;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::{symmetrize, weak_components, DirectedGraph, SymmetrizedView};

/// Components with modulus below this carry no usable phase.
pub const ZERO_MODULUS: f64 = 1e-12;
/// Eigenvalues closer than this to the minimum are treated as tied.
pub const DEGENERACY_GAP: f64 = 1e-10;

/// Hermitian matrix `L = D - T ∘ W` with `T_ij = exp(i δ_ij)` and
/// `δ_ij = -2π g α_ij`.
#[derive(Clone, Debug)]
pub struct MagneticLaplacian {
    g: f64,
    matrix: DMatrix<Complex64>,
}

impl MagneticLaplacian {
    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SpectralWarning {
    /// The smallest eigenvalue is shared by `multiplicity` eigenvectors.
    DegenerateEigenvalue { multiplicity: usize },
    /// These nodes had a (near) zero eigenvector component and were given θ = 0.
    ZeroModulus { nodes: Vec<usize> },
    /// The symmetrized graph splits into this many components.
    Disconnected { components: usize },
}

#[derive(Clone, Debug)]
pub struct Eigenpair {
    pub value: f64,
    /// Unit norm, gauge fixed so that its first non-negligible component is
    /// real and positive.
    pub vector: DVector<Complex64>,
    pub multiplicity: usize,
}

/// Phase angles from the smallest eigenvector of the Magnetic Laplacian.
#[derive(Clone, Debug)]
pub struct PhaseAssignment {
    /// One angle per node in `[0, 2π)`, with θ_0 = 0.
    pub theta: Vec<f64>,
    pub g: f64,
    pub smallest_eigenvalue: f64,
    pub warnings: Vec<SpectralWarning>,
}

fn check_g(g: f64) -> Result<()> {
    if !(0.0..=0.5).contains(&g) {
        return Err(Error::InvalidParameter(format!("g = {g} outside [0, 1/2]")));
    }
    Ok(())
}

/// Rotation `exp(i δ_ij)` carried by the pair (i, j).
fn transport(alpha: i8, g: f64) -> Complex64 {
    Complex64::from_polar(1.0, -TAU * g * f64::from(alpha))
}

/// Frustration summed over all ordered pairs:
/// `Σ_ij W_ij |exp(iθ_i) - exp(iδ_ij) exp(iθ_j)|²`.
pub fn frustration(sym: &SymmetrizedView, theta: &[f64], g: f64) -> Result<f64> {
    let n = sym.n();
    if theta.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: theta.len(),
        });
    }
    check_g(g)?;
    let phase: Vec<Complex64> = theta
        .iter()
        .map(|&t| Complex64::from_polar(1.0, t))
        .collect();
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            let w = sym.wsym[(i, j)];
            if w != 0.0 {
                total += w * (phase[i] - transport(sym.alpha[(i, j)], g) * phase[j]).norm_sqr();
            }
        }
    }
    Ok(total)
}

pub fn build_magnetic_laplacian(sym: &SymmetrizedView, g: f64) -> Result<MagneticLaplacian> {
    check_g(g)?;
    let n = sym.n();
    let matrix = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Complex64::new(sym.degrees[i], 0.0)
        } else {
            let w = sym.wsym[(i, j)];
            if w == 0.0 {
                Complex64::new(0.0, 0.0)
            } else {
                -transport(sym.alpha[(i, j)], g) * w
            }
        }
    });
    Ok(MagneticLaplacian { g, matrix })
}

/// `ψᴴ L ψ`; the imaginary part is roundoff for a Hermitian matrix and is dropped.
pub fn quadratic_form(l: &MagneticLaplacian, psi: &[Complex64]) -> Result<f64> {
    let n = l.n();
    if psi.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: psi.len(),
        });
    }
    let v = DVector::from_column_slice(psi);
    let value = v.dotc(&(&l.matrix * &v));
    debug_assert!(value.im.abs() <= 1e-10 * (1.0 + value.re.abs()) * (1.0 + v.norm_squared()));
    Ok(value.re)
}

/// Multiply by the unit scalar that makes the first component with modulus
/// at least [`ZERO_MODULUS`] real and nonnegative.
fn fix_gauge(v: &mut DVector<Complex64>) {
    if let Some(pivot) = v.iter().find(|z| z.norm() >= ZERO_MODULUS).copied() {
        let rot = pivot.conj() / pivot.norm();
        for z in v.iter_mut() {
            *z *= rot;
        }
    }
}

/// Smallest eigenpair from a dense Hermitian eigendecomposition.
///
/// When the smallest eigenvalue is tied (gap below [`DEGENERACY_GAP`]) the
/// last tied eigenvector in ascending solver order is returned and
/// `multiplicity` reports the size of the tied group.
pub fn smallest_eigenpair(l: &MagneticLaplacian) -> Result<Eigenpair> {
    let n = l.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let eig = l.matrix.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let min = eig.eigenvalues[order[0]];
    let tied = order
        .iter()
        .take_while(|&&k| eig.eigenvalues[k] - min < DEGENERACY_GAP)
        .count();
    let pick = order[tied - 1];
    let mut vector: DVector<Complex64> = eig.eigenvectors.column(pick).into_owned();
    let norm = vector.norm();
    if norm > 0.0 {
        vector.unscale_mut(norm);
    }
    fix_gauge(&mut vector);
    Ok(Eigenpair {
        value: eig.eigenvalues[pick],
        vector,
        multiplicity: tied,
    })
}

/// Wrap an angle into `[0, 2π)`.
pub fn wrap_angle(t: f64) -> f64 {
    let w = t.rem_euclid(TAU);
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// Estimate node phases: symmetrize, build `L^(g)`, take the phases of the
/// smallest eigenvector.
pub fn magnetic_algorithm(graph: &DirectedGraph, g: f64) -> Result<PhaseAssignment> {
    graph.require_unweighted("the Magnetic Laplacian")?;
    let sym = symmetrize(graph)?;
    let laplacian = build_magnetic_laplacian(&sym, g)?;
    let pair = smallest_eigenpair(&laplacian)?;

    let mut warnings = Vec::new();
    let components = weak_components(graph).len();
    if components > 1 {
        warn!(
            "symmetrized graph has {components} components; phases are not comparable across them"
        );
        warnings.push(SpectralWarning::Disconnected { components });
    }
    if pair.multiplicity > 1 {
        warn!(
            "smallest eigenvalue {:.3e} has multiplicity {} at g = {g}",
            pair.value, pair.multiplicity
        );
        warnings.push(SpectralWarning::DegenerateEigenvalue {
            multiplicity: pair.multiplicity,
        });
    }

    let mut zero = Vec::new();
    let theta = pair
        .vector
        .iter()
        .enumerate()
        .map(|(i, z)| {
            if z.norm() < ZERO_MODULUS {
                zero.push(i);
                0.0
            } else {
                wrap_angle(z.arg())
            }
        })
        .collect();
    if !zero.is_empty() {
        warn!(
            "{} eigenvector components are numerically zero; their phase is set to 0",
            zero.len()
        );
        warnings.push(SpectralWarning::ZeroModulus { nodes: zero });
    }

    Ok(PhaseAssignment {
        theta,
        g,
        smallest_eigenvalue: pair.value,
        warnings,
    })
}
