//! Register layouts: named, role-tagged subsystems of a multipartite state.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Role a subsystem plays in the exchange task.
///
/// `A1`/`A2` belong to Alice, `B1`/`B2` to Bob, `R` is the untouchable
/// purifying reference, and `Ancilla` marks registers attached during a
/// protocol (resources and work space).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    A1,
    A2,
    B1,
    B2,
    R,
    Ancilla,
}

impl Role {
    pub fn owner(self) -> Option<Party> {
        match self {
            Role::A1 | Role::A2 => Some(Party::Alice),
            Role::B1 | Role::B2 => Some(Party::Bob),
            Role::R | Role::Ancilla => None,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Role::A1 => "A1",
            Role::A2 => "A2",
            Role::B1 => "B1",
            Role::B2 => "B2",
            Role::R => "R",
            Role::Ancilla => "ancilla",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A1" | "a1" => Ok(Role::A1),
            "A2" | "a2" => Ok(Role::A2),
            "B1" | "b1" => Ok(Role::B1),
            "B2" | "b2" => Ok(Role::B2),
            "R" | "r" => Ok(Role::R),
            "ancilla" => Ok(Role::Ancilla),
            other => Err(Error::Document(format!("unknown role `{other}`"))),
        }
    }
}

/// One of the two users performing the exchange.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Party {
    Alice,
    Bob,
}

impl fmt::Display for Party {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Party::Alice => "Alice",
            Party::Bob => "Bob",
        })
    }
}

/// Which parts the users exchange: only `A1`/`B1`, or the whole `A`/`B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExchangePair {
    A1B1,
    AB,
}

impl ExchangePair {
    /// Roles forming the X (Alice) side of the pair.
    pub fn x_roles(self) -> &'static [Role] {
        match self {
            ExchangePair::A1B1 => &[Role::A1],
            ExchangePair::AB => &[Role::A1, Role::A2],
        }
    }

    /// Roles forming the Y (Bob) side of the pair.
    pub fn y_roles(self) -> &'static [Role] {
        match self {
            ExchangePair::A1B1 => &[Role::B1],
            ExchangePair::AB => &[Role::B1, Role::B2],
        }
    }
}

impl fmt::Display for ExchangePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExchangePair::A1B1 => "(A1,B1)",
            ExchangePair::AB => "(A,B)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subsystem {
    pub name: String,
    pub dim: usize,
    pub role: Role,
}

/// Ordered list of named subsystems with role tags.
///
/// The first subsystem is the most significant digit of the linear basis
/// index, so `|abc⟩` on subsystems `(X, Y, Z)` has index `(a·dim_Y + b)·dim_Z + c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsystemLayout {
    subsystems: Vec<Subsystem>,
}

impl SubsystemLayout {
    pub fn new(subsystems: Vec<Subsystem>) -> Result<Self> {
        for (i, s) in subsystems.iter().enumerate() {
            if s.dim == 0 {
                return Err(Error::InvalidDimension {
                    name: s.name.clone(),
                    dim: s.dim,
                });
            }
            if subsystems[..i].iter().any(|t| t.name == s.name) {
                return Err(Error::DuplicateName(s.name.clone()));
            }
        }
        Ok(SubsystemLayout { subsystems })
    }

    /// Convenience constructor from `(name, dim, role)` triples.
    pub fn from_parts(parts: &[(&str, usize, Role)]) -> Result<Self> {
        Self::new(
            parts
                .iter()
                .map(|&(name, dim, role)| Subsystem {
                    name: name.to_string(),
                    dim,
                    role,
                })
                .collect(),
        )
    }

    /// Five qubits named `A1 B1 A2 B2 R`, the layout of the worked examples.
    pub fn five_qubit() -> Self {
        Self::from_parts(&[
            ("A1", 2, Role::A1),
            ("B1", 2, Role::B1),
            ("A2", 2, Role::A2),
            ("B2", 2, Role::B2),
            ("R", 2, Role::R),
        ])
        .expect("static layout")
    }

    /// Four qubits named `A1 B1 A2 B2` (no reference system).
    pub fn four_qubit() -> Self {
        Self::from_parts(&[
            ("A1", 2, Role::A1),
            ("B1", 2, Role::B1),
            ("A2", 2, Role::A2),
            ("B2", 2, Role::B2),
        ])
        .expect("static layout")
    }

    pub fn subsystems(&self) -> &[Subsystem] {
        &self.subsystems
    }

    pub fn len(&self) -> usize {
        self.subsystems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsystems.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.subsystems.iter().map(|s| s.dim).product()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.subsystems.iter().map(|s| s.dim).collect()
    }

    pub fn position(&self, name: &str) -> Result<usize> {
        self.subsystems
            .iter()
            .position(|s| s.name == name)
            .ok_or_else(|| Error::UnknownSubsystem(name.to_string()))
    }

    pub fn subsystem(&self, name: &str) -> Result<&Subsystem> {
        Ok(&self.subsystems[self.position(name)?])
    }

    /// Positions (in layout order) of all subsystems carrying `role`.
    pub fn role_positions(&self, role: Role) -> Vec<usize> {
        self.subsystems
            .iter()
            .enumerate()
            .filter(|(_, s)| s.role == role)
            .map(|(i, _)| i)
            .collect()
    }

    /// Positions of subsystems carrying any of `roles`, in layout order.
    pub fn roles_positions(&self, roles: &[Role]) -> Vec<usize> {
        self.subsystems
            .iter()
            .enumerate()
            .filter(|(_, s)| roles.contains(&s.role))
            .map(|(i, _)| i)
            .collect()
    }

    /// Same as [`roles_positions`](Self::roles_positions) but errors when a
    /// requested role has no subsystem at all.
    pub fn required_roles_positions(&self, roles: &[Role]) -> Result<Vec<usize>> {
        let pos = self.roles_positions(roles);
        if pos.is_empty() {
            return Err(Error::MissingRole(roles[0]));
        }
        Ok(pos)
    }

    /// Checks that the mandatory roles of `pair` are present.
    pub fn require_pair(&self, pair: ExchangePair) -> Result<()> {
        for role in [Role::A1, Role::B1] {
            if self.role_positions(role).is_empty() {
                return Err(Error::MissingRole(role));
            }
        }
        let _ = pair;
        Ok(())
    }

    pub fn names(&self) -> Vec<&str> {
        self.subsystems.iter().map(|s| s.name.as_str()).collect()
    }

    /// Total dimension of the subsystems at `positions`.
    pub fn group_dim(&self, positions: &[usize]) -> usize {
        positions.iter().map(|&p| self.subsystems[p].dim).product()
    }

    /// New layout keeping only the subsystems at `positions` (given in layout order).
    pub fn keep(&self, positions: &[usize]) -> SubsystemLayout {
        SubsystemLayout {
            subsystems: positions
                .iter()
                .map(|&p| self.subsystems[p].clone())
                .collect(),
        }
    }

    /// New layout with `extra` appended.
    pub fn extend(&self, extra: Vec<Subsystem>) -> Result<SubsystemLayout> {
        let mut subsystems = self.subsystems.clone();
        subsystems.extend(extra);
        SubsystemLayout::new(subsystems)
    }

    /// New layout with the subsystems at `positions` removed.
    pub fn without(&self, positions: &[usize]) -> SubsystemLayout {
        SubsystemLayout {
            subsystems: self
                .subsystems
                .iter()
                .enumerate()
                .filter(|(i, _)| !positions.contains(i))
                .map(|(_, s)| s.clone())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_names() {
        let err = SubsystemLayout::from_parts(&[("Q", 2, Role::A1), ("Q", 2, Role::B1)]);
        assert!(matches!(err, Err(Error::DuplicateName(_))));
    }

    #[test]
    fn rejects_zero_dimension() {
        let err = SubsystemLayout::from_parts(&[("Q", 0, Role::A1)]);
        assert!(matches!(err, Err(Error::InvalidDimension { .. })));
    }

    #[test]
    fn role_lookup() {
        let layout = SubsystemLayout::five_qubit();
        assert_eq!(layout.role_positions(Role::A1), vec![0]);
        assert_eq!(layout.roles_positions(&[Role::B1, Role::B2]), vec![1, 3]);
        assert_eq!(layout.total_dim(), 32);
    }

    #[test]
    fn missing_role_is_reported() {
        let layout = SubsystemLayout::from_parts(&[("X", 2, Role::A1)]).unwrap();
        assert!(matches!(
            layout.require_pair(ExchangePair::A1B1),
            Err(Error::MissingRole(Role::B1))
        ));
    }
}
