//! Dense F2 row reduction on bit vectors.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn xor(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn pivot(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64)
                .filter(move |b| w >> b & 1 == 1)
                .map(move |b| i * 64 + b)
        })
    }
}

/// Incrementally built echelon basis keyed by pivot column.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    rows: Vec<(usize, BitVec)>,
}

impl Echelon {
    /// Reduces `v` against the basis; inserts and returns true when independent.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        self.reduce(&mut v);
        match v.pivot() {
            Some(p) => {
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }

    pub fn reduce(&self, v: &mut BitVec) {
        for (p, row) in &self.rows {
            if v.get(*p) {
                v.xor(row);
            }
        }
    }
}

/// Null space of the linear map whose image of basis vector `i` is `images[i]`.
pub(crate) fn kernel(images: &[BitVec]) -> Vec<BitVec> {
    let n = images.len();
    // Rows carry (image | combination) so the combination tracks which inputs were used.
    let mut rows: Vec<(BitVec, BitVec)> = images
        .iter()
        .enumerate()
        .map(|(i, img)| {
            let mut comb = BitVec::zeros(n);
            comb.set(i);
            (img.clone(), comb)
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for r in 0..rows.len() {
        for &(col, pr) in &pivots {
            if rows[r].0.get(col) {
                let (img, comb) = rows[pr].clone();
                rows[r].0.xor(&img);
                rows[r].1.xor(&comb);
            }
        }
        if let Some(col) = rows[r].0.pivot() {
            // Keep earlier rows reduced against the new pivot too.
            let (img, comb) = rows[r].clone();
            for &(_, pr) in &pivots {
                if rows[pr].0.get(col) {
                    rows[pr].0.xor(&img);
                    rows[pr].1.xor(&comb);
                }
            }
            pivots.push((col, r));
        }
    }
    rows.into_iter()
        .filter(|(img, _)| img.is_zero())
        .map(|(_, comb)| comb)
        .collect()
}
