//! Finite groups presented by exhaustive enumeration under a group law,
//! with conjugacy classes and power maps.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{usage, Error, Result};

pub trait GroupLaw: Send + Sync {
    type Elem: Clone + Eq + Hash + Ord + Debug + Send + Sync;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

/// Class data that only depends on the abstract group, in a fixed class order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassData {
    pub order: u64,
    pub sizes: Vec<u64>,
    /// Element index (in sorted order) of each class representative.
    pub representatives: Vec<usize>,
    pub inverse_class: Vec<usize>,
    pub element_orders: Vec<u64>,
    pub exponent: u64,
    /// power_map[c][j] = class of g^j for g in class c, j in 0..exponent.
    pub power_map: Vec<Vec<usize>>,
}

impl ClassData {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn power(&self, class: usize, j: i64) -> usize {
        self.power_map[class][j.rem_euclid(self.exponent as i64) as usize]
    }
}

pub struct FiniteGroup<L: GroupLaw> {
    law: L,
    elements: Vec<L::Elem>,
    index: HashMap<L::Elem, usize>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
    class_of: Vec<usize>,
    classes: ClassData,
}

impl<L: GroupLaw> FiniteGroup<L> {
    /// Builds the group from a complete element list. Closure under the law is checked
    /// on generators only.
    pub fn from_elements(law: L, mut elements: Vec<L::Elem>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        if elements.is_empty() {
            return Err(usage("a group needs at least one element"));
        }
        let index: HashMap<L::Elem, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let lookup = |e: &L::Elem| index.get(e).copied().ok_or_else(|| Error::Internal(format!("element list not closed: {e:?}")));
        let inverse = elements.iter().map(|e| lookup(&law.inv(e))).collect::<Result<Vec<_>>>()?;
        let id = lookup(&law.identity())?;

        // greedy generating set in element order
        let n = elements.len();
        let mut in_sub = vec![false; n];
        in_sub[id] = true;
        let mut sub = vec![id];
        let mut generators = Vec::new();
        for g in 0..n {
            if in_sub[g] {
                continue;
            }
            generators.push(g);
            let mut frontier = sub.clone();
            while let Some(x) = frontier.pop() {
                for &s in &generators {
                    let y = lookup(&law.mul(&elements[x], &elements[s]))?;
                    if !in_sub[y] {
                        in_sub[y] = true;
                        sub.push(y);
                        frontier.push(y);
                    }
                }
            }
        }

        // conjugacy classes by orbit closure from the smallest unvisited element
        const UNSET: usize = usize::MAX;
        let mut class_of = vec![UNSET; n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for seed in 0..n {
            if class_of[seed] != UNSET {
                continue;
            }
            let c = members.len();
            class_of[seed] = c;
            let mut orbit = vec![seed];
            let mut frontier = vec![seed];
            while let Some(x) = frontier.pop() {
                for &s in &generators {
                    let conj = law.mul(&law.mul(&elements[s], &elements[x]), &elements[inverse[s]]);
                    let y = lookup(&conj)?;
                    if class_of[y] == UNSET {
                        class_of[y] = c;
                        orbit.push(y);
                        frontier.push(y);
                    }
                }
            }
            members.push(orbit);
        }
        let representatives: Vec<usize> = members.iter().map(|m| *m.iter().min().unwrap()).collect();
        let sizes: Vec<u64> = members.iter().map(|m| m.len() as u64).collect();
        let inverse_class: Vec<usize> = representatives.iter().map(|&r| class_of[inverse[r]]).collect();

        let mut element_orders = Vec::with_capacity(representatives.len());
        for &r in &representatives {
            let mut k = 1u64;
            let mut acc = r;
            while acc != id {
                acc = lookup(&law.mul(&elements[acc], &elements[r]))?;
                k += 1;
            }
            element_orders.push(k);
        }
        let exponent = element_orders.iter().copied().fold(1, num_integer::lcm);
        let mut power_map = Vec::with_capacity(representatives.len());
        for &r in &representatives {
            let mut row = Vec::with_capacity(exponent as usize);
            let mut acc = id;
            for _ in 0..exponent {
                row.push(class_of[acc]);
                acc = lookup(&law.mul(&elements[acc], &elements[r]))?;
            }
            power_map.push(row);
        }
        let classes = ClassData { order: n as u64, sizes, representatives, inverse_class, element_orders, exponent, power_map };
        Ok(FiniteGroup { law, elements, index, inverse, generators, class_of, classes })
    }

    pub fn law(&self) -> &L {
        &self.law
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[L::Elem] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &L::Elem {
        &self.elements[idx]
    }

    pub fn index_of(&self, e: &L::Elem) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn inverse_index(&self, idx: usize) -> usize {
        self.inverse[idx]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn classes(&self) -> &ClassData {
        &self.classes
    }

    pub fn class_of_index(&self, idx: usize) -> usize {
        self.class_of[idx]
    }

    pub fn class_of(&self, e: &L::Elem) -> Option<usize> {
        self.index_of(e).map(|i| self.class_of[i])
    }

    pub fn representative(&self, class: usize) -> &L::Elem {
        &self.elements[self.classes.representatives[class]]
    }

    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        self.index[&self.law.mul(&self.elements[a], &self.elements[b])]
    }

    /// Class of g^j for g in the given class (any integer j).
    pub fn power_map(&self, class: usize, j: i64) -> usize {
        self.classes.power(class, j)
    }

    /// Class-multiplication coefficients a[i][j][k] = #{x ∈ Cᵢ : x⁻¹·g_k ∈ Cⱼ},
    /// flattened as (i·r + j)·r + k.
    pub fn class_coefficients(&self) -> Vec<u64> {
        let r = self.classes.count();
        let mut a = vec![0u64; r * r * r];
        for (k, &gk) in self.classes.representatives.iter().enumerate() {
            for x in 0..self.order() {
                let y = self.mul_index(self.inverse[x], gk);
                let (i, j) = (self.class_of[x], self.class_of[y]);
                a[(i * r + j) * r + k] += 1;
            }
        }
        a
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.count() == self.order()
    }
}
