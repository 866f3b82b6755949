use super::partition::Partition;

/// Derived statistics of a partition. Indices are 1-based, so `λ_1` is the
/// largest part and counts toward `odd_indexed_sum`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PartitionStats {
    pub length: u64,
    pub largest: u64,
    pub weight: u64,
    pub odd_parts: u64,
    pub even_parts: u64,
    pub overlined_count: u64,
    pub odd_indexed_sum: u64,
    pub even_indexed_sum: u64,
    pub alt_sum: i64,
}

pub fn stats_of(p: &Partition) -> PartitionStats {
    let mut s = PartitionStats { length: p.len() as u64, largest: p.largest() as u64, ..Default::default() };
    for (i, (&part, &over)) in p.parts().iter().zip(p.overlined()).enumerate() {
        let v = part as u64;
        s.weight += v;
        if part % 2 == 1 {
            s.odd_parts += 1;
        } else {
            s.even_parts += 1;
        }
        if over {
            s.overlined_count += 1;
        }
        if i % 2 == 0 {
            s.odd_indexed_sum += v;
        } else {
            s.even_indexed_sum += v;
        }
    }
    s.alt_sum = s.odd_indexed_sum as i64 - s.even_indexed_sum as i64;
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_examples() {
        let s = stats_of(&"3,1".parse().unwrap());
        assert_eq!((s.length, s.odd_parts, s.even_parts), (2, 2, 0));
        assert_eq!((s.odd_indexed_sum, s.even_indexed_sum, s.alt_sum), (3, 1, 2));
        assert_eq!(stats_of(&Partition::empty()), PartitionStats::default());
        let s = stats_of(&"12,9,5,1".parse().unwrap());
        assert_eq!((s.weight, s.odd_parts, s.even_parts), (27, 3, 1));
        assert_eq!((s.odd_indexed_sum, s.even_indexed_sum, s.alt_sum), (17, 10, 7));
        assert_eq!(stats_of(&"4~,2".parse().unwrap()).overlined_count, 1);
    }
}
