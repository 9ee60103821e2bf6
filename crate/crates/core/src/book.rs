//! Doctest shims: every code block in `book/src/*.md` compiles and runs as
//! part of `cargo test --doc`, keeping the guide in sync with the crate.

#[doc = include_str!("../../../book/src/introduction.md")]
pub struct Introduction;

#[doc = include_str!("../../../book/src/configurations.md")]
pub struct Configurations;

#[doc = include_str!("../../../book/src/zariski.md")]
pub struct Zariski;

#[doc = include_str!("../../../book/src/multiplicities.md")]
pub struct Multiplicities;

#[doc = include_str!("../../../book/src/theorems.md")]
pub struct Theorems;

#[doc = include_str!("../../../book/src/oracle.md")]
pub struct Oracle;

#[doc = include_str!("../../../book/src/toric-bridge.md")]
pub struct ToricBridge;

#[doc = include_str!("../../../book/src/cli.md")]
pub struct Cli;
