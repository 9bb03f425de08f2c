use std::collections::HashMap;

use crate::error::Result;
use crate::ring::{Element, Ring};

type Bits = Vec<u64>;

fn bits_new(n: usize) -> Bits {
    vec![0; n.div_ceil(64)]
}

fn bit(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

/// Operation tables of a finite ring, indexed by canonical element index,
/// together with the lattice of ideals generated by finitely many elements.
///
/// Every exhaustive checker runs on these tables; building them once costs
/// `O(n²)` ring operations.
pub struct FiniteTables {
    ring: Ring,
    elems: Vec<Element>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: u32,
    one: u32,
    unit: Vec<bool>,
    idempotents: Vec<u32>,
    ideals: Vec<Bits>,
    principal: Vec<u32>,
    sum: Vec<u32>,
    whole: u32,
}

impl FiniteTables {
    pub fn new(ring: &Ring) -> Result<FiniteTables> {
        let elems = ring.elements()?;
        let n = elems.len();
        let idx = |e: &Element| ring.index_of(e).expect("closed operation") as u32;
        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            for j in i..n {
                let s = idx(&ring.add(&elems[i], &elems[j]));
                let p = idx(&ring.mul(&elems[i], &elems[j]));
                add[i * n + j] = s;
                add[j * n + i] = s;
                mul[i * n + j] = p;
                mul[j * n + i] = p;
            }
        }
        let neg = elems.iter().map(|e| idx(&ring.neg(e))).collect();
        let zero = idx(&ring.zero());
        let one = idx(&ring.one());
        let unit: Vec<bool> = (0..n)
            .map(|i| (0..n).any(|j| mul[i * n + j] == one))
            .collect();
        let idempotents = (0..n as u32)
            .filter(|&i| mul[i as usize * n + i as usize] == i)
            .collect();

        let mut ideals: Vec<Bits> = Vec::new();
        let mut lookup: HashMap<Bits, u32> = HashMap::new();
        let mut intern = |b: Bits, ideals: &mut Vec<Bits>| -> u32 {
            *lookup.entry(b.clone()).or_insert_with(|| {
                ideals.push(b);
                (ideals.len() - 1) as u32
            })
        };
        let principal: Vec<u32> = (0..n)
            .map(|i| {
                let mut b = bits_new(n);
                for j in 0..n {
                    set(&mut b, mul[i * n + j] as usize);
                }
                intern(b, &mut ideals)
            })
            .collect();

        // Close the family under ideal sums.
        let members = |b: &Bits| (0..n).filter(|&i| bit(b, i)).collect::<Vec<_>>();
        let mut pair_sums: HashMap<(u32, u32), u32> = HashMap::new();
        let mut done = 0;
        while done < ideals.len() {
            let k = ideals.len();
            for i in 0..k {
                for j in 0..k {
                    if (i < done && j < done) || pair_sums.contains_key(&(i as u32, j as u32)) {
                        continue;
                    }
                    let (mi, mj) = (members(&ideals[i]), members(&ideals[j]));
                    let mut b = bits_new(n);
                    for &x in &mi {
                        for &y in &mj {
                            set(&mut b, add[x * n + y] as usize);
                        }
                    }
                    let id = intern(b, &mut ideals);
                    pair_sums.insert((i as u32, j as u32), id);
                }
            }
            done = k;
        }
        let k = ideals.len();
        let mut sum = vec![0u32; k * k];
        for ((i, j), id) in pair_sums {
            sum[i as usize * k + j as usize] = id;
        }
        let whole = principal[one as usize];

        Ok(FiniteTables {
            ring: ring.clone(),
            elems,
            add,
            mul,
            neg,
            zero,
            one,
            unit,
            idempotents,
            ideals,
            principal,
            sum,
            whole,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn element(&self, i: u32) -> &Element {
        &self.elems[i as usize]
    }

    pub fn index(&self, e: &Element) -> Option<u32> {
        self.ring.index_of(e).map(|i| i as u32)
    }

    pub fn zero(&self) -> u32 {
        self.zero
    }

    pub fn one(&self) -> u32 {
        self.one
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.len() + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.len() + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// `a + b*c`.
    #[inline]
    pub fn add_mul(&self, a: u32, b: u32, c: u32) -> u32 {
        self.add(a, self.mul(b, c))
    }

    #[inline]
    pub fn is_unit(&self, a: u32) -> bool {
        self.unit[a as usize]
    }

    pub fn idempotents(&self) -> &[u32] {
        &self.idempotents
    }

    pub fn ideal_count(&self) -> usize {
        self.ideals.len()
    }

    /// Identifier of the ideal `aR`.
    #[inline]
    pub fn principal(&self, a: u32) -> u32 {
        self.principal[a as usize]
    }

    /// Identifier of `I + J`.
    #[inline]
    pub fn ideal_sum(&self, i: u32, j: u32) -> u32 {
        self.sum[i as usize * self.ideals.len() + j as usize]
    }

    #[inline]
    pub fn in_ideal(&self, ideal: u32, x: u32) -> bool {
        bit(&self.ideals[ideal as usize], x as usize)
    }

    /// Identifier of the ideal generated by `gens`.
    pub fn generated(&self, gens: &[u32]) -> u32 {
        gens.iter()
            .fold(self.principal(self.zero), |acc, &g| self.ideal_sum(acc, self.principal(g)))
    }

    pub fn ideal_members(&self, ideal: u32) -> Vec<u32> {
        (0..self.len() as u32)
            .filter(|&x| self.in_ideal(ideal, x))
            .collect()
    }

    #[inline]
    pub fn comaximal2(&self, a: u32, b: u32) -> bool {
        self.ideal_sum(self.principal(a), self.principal(b)) == self.whole
    }

    #[inline]
    pub fn comaximal3(&self, a: u32, b: u32, c: u32) -> bool {
        let ab = self.ideal_sum(self.principal(a), self.principal(b));
        self.ideal_sum(ab, self.principal(c)) == self.whole
    }

    pub fn comaximal(&self, gens: &[u32]) -> bool {
        self.generated(gens) == self.whole
    }
}
