//! Deterministic Schreier–Sims.

use num_bigint::BigUint;
use num_traits::One;

use super::perm::Perm;

#[derive(Clone, Debug)]
pub struct Level {
    pub point: u32,
    pub gens: Vec<Perm>,
    pub orbit: Vec<u32>,
    /// `transversal[β]` maps the base point to β.
    pub transversal: Vec<Option<Perm>>,
}

#[derive(Clone, Debug)]
pub struct Bsgs {
    pub degree: usize,
    pub base: Vec<u32>,
    pub strong: Vec<Perm>,
    pub levels: Vec<Level>,
}

impl Bsgs {
    /// New base points are always the smallest point moved by the generator
    /// that fixes the current base.
    pub fn new(degree: usize, gens: &[Perm]) -> Self {
        let mut strong: Vec<Perm> = Vec::new();
        for g in gens {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let mut base: Vec<u32> = Vec::new();
        for g in &strong {
            if base.iter().all(|&b| g.image(b) == b) {
                base.push(g.first_moved().unwrap());
            }
        }
        let mut bsgs = Bsgs { degree, base, strong, levels: Vec::new() };
        bsgs.rebuild_levels();
        let mut i = bsgs.levels.len() as isize - 1;
        while i >= 0 {
            match bsgs.failing_schreier_generator(i as usize) {
                Some((res, j)) => {
                    if j == bsgs.base.len() {
                        bsgs.base.push(res.first_moved().unwrap());
                    }
                    bsgs.strong.push(res);
                    bsgs.rebuild_levels();
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
        bsgs
    }

    fn rebuild_levels(&mut self) {
        let mut levels = Vec::with_capacity(self.base.len());
        for (i, &b) in self.base.iter().enumerate() {
            let gens: Vec<Perm> = self
                .strong
                .iter()
                .filter(|g| self.base[..i].iter().all(|&x| g.image(x) == x))
                .cloned()
                .collect();
            levels.push(Self::orbit_level(self.degree, b, gens));
        }
        self.levels = levels;
    }

    fn orbit_level(degree: usize, point: u32, gens: Vec<Perm>) -> Level {
        let mut transversal: Vec<Option<Perm>> = vec![None; degree];
        transversal[point as usize] = Some(Perm::identity(degree));
        let mut orbit = vec![point];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            k += 1;
            for s in &gens {
                let y = s.image(x);
                if transversal[y as usize].is_none() {
                    let u = transversal[x as usize].as_ref().unwrap().then(s);
                    transversal[y as usize] = Some(u);
                    orbit.push(y);
                }
            }
        }
        Level { point, gens, orbit, transversal }
    }

    fn failing_schreier_generator(&self, i: usize) -> Option<(Perm, usize)> {
        let lvl = &self.levels[i];
        for &beta in &lvl.orbit {
            let u = lvl.transversal[beta as usize].as_ref().unwrap();
            for s in &lvl.gens {
                let gamma = s.image(beta);
                let ug = lvl.transversal[gamma as usize].as_ref().unwrap();
                let h = u.then(s).then(&ug.inverse());
                let (res, j) = self.strip(h, i + 1);
                if !res.is_identity() {
                    return Some((res, j));
                }
            }
        }
        None
    }

    /// Sifts `g` through levels `start..`; returns the residue and the level it stopped at.
    pub fn strip(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for l in start..self.levels.len() {
            let lvl = &self.levels[l];
            let beta = g.image(lvl.point);
            match &lvl.transversal[beta as usize] {
                Some(u) => g = g.then(&u.inverse()),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.strip(g.clone(), 0).0.is_identity()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Every element, as products of transversal elements.
    pub fn elements(&self) -> Vec<Perm> {
        let mut cur = vec![Perm::identity(self.degree)];
        for lvl in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(cur.len() * lvl.orbit.len());
            for x in &cur {
                for &b in &lvl.orbit {
                    next.push(x.then(lvl.transversal[b as usize].as_ref().unwrap()));
                }
            }
            cur = next;
        }
        cur
    }
}
