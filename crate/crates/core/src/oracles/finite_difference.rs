use crate::analysis::{sphere_potential, Model};
use crate::geometry::SphereGeometry;
use crate::quantum::{wall_potential_quantum, DipoleVariances};
use crate::semiclassical::{wall_potential_semiclassical, AtomModel};
use crate::{Error, Result};

/// The conductor the atom interacts with.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Surface {
    Sphere { radius: f64 },
    Wall,
}

/// Potential of `model` at separation `a` from `surface`.
pub fn potential_at(model: Model, surface: Surface, atom: &AtomModel, a: f64) -> Result<f64> {
    match surface {
        Surface::Sphere { radius } => {
            Ok(sphere_potential(model, &SphereGeometry::new(radius, a)?, atom).total)
        }
        Surface::Wall => match model {
            Model::Semiclassical => wall_potential_semiclassical(a, atom),
            Model::Quantum => wall_potential_quantum(a, &DipoleVariances::isotropic(atom.dx2())?),
            Model::TwoLevel => wall_potential_quantum(
                a,
                &DipoleVariances::isotropic(0.5 * atom.omega0() * atom.alpha())?,
            ),
        },
    }
}

/// Radial force `-dU/da` by central differences with step `h < a/100`.
/// Negative values pull the atom toward the surface.
pub fn finite_difference_force(
    model: Model,
    surface: Surface,
    atom: &AtomModel,
    a: f64,
    h: f64,
) -> Result<f64> {
    if !(a.is_finite() && a > 0.0) {
        return Err(Error::Domain("separation must be positive"));
    }
    if !(h > 0.0 && h < a / 100.0) {
        return Err(Error::Precondition("finite-difference step must satisfy 0 < h < a/100"));
    }
    let up = potential_at(model, surface, atom, a + h)?;
    let down = potential_at(model, surface, atom, a - h)?;
    Ok(-(up - down) / (2.0 * h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wall_quantum_force() {
        let atom = AtomModel::new(1.0, 1.0, 1.0).unwrap();
        let f = finite_difference_force(Model::Quantum, Surface::Wall, &atom, 1.0, 1e-4).unwrap();
        assert!((f + 0.75).abs() < 1e-7, "{f}");
    }

    #[test]
    fn step_guard() {
        let atom = AtomModel::new(1.0, 1.0, 1.0).unwrap();
        assert!(matches!(
            finite_difference_force(Model::Quantum, Surface::Wall, &atom, 1.0, 0.02),
            Err(Error::Precondition(_))
        ));
        assert!(finite_difference_force(Model::Quantum, Surface::Wall, &atom, 1.0, 0.0).is_err());
    }
}
