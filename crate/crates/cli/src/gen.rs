use std::fs;
use std::path::Path;

use klcf::gen::{generate_instance, Instance};

use crate::args::GenArgs;
use crate::error::{CliError, Result};

/// Byte used for symbol `s` in generated files: `a..z`, then `A..Z`, `0..9`,
/// then the remaining byte values except `\n`.
pub fn symbol_byte(s: u32) -> u8 {
    const FIRST: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    let s = s as usize;
    if s < FIRST.len() {
        return FIRST[s];
    }
    (0..=255u8)
        .filter(|b| *b != b'\n' && !FIRST.contains(b))
        .nth(s - FIRST.len())
        .expect("at most 255 symbols")
}

pub fn encode(symbols: &[u32]) -> Vec<u8> {
    let table: Vec<u8> = (0..=symbols.iter().copied().max().unwrap_or(0)).map(symbol_byte).collect();
    symbols.iter().map(|&s| table[s as usize]).collect()
}

fn write(path: &Path, symbols: &[u32]) -> Result<()> {
    let mut bytes = encode(symbols);
    bytes.push(b'\n');
    fs::write(path, bytes).map_err(|source| CliError::Write {
        path: path.to_owned(),
        source,
    })
}

pub fn gen(args: &GenArgs) -> Result<Instance> {
    let inst = generate_instance(args.kind, args.n, args.sigma, args.k, args.len, args.seed)?;
    write(&args.out1, &inst.s1)?;
    write(&args.out2, &inst.s2)?;
    Ok(inst)
}
