// Copyright 2026 commonbath contributors
// SPDX-License-Identifier: Apache-2.0

//! Benchmark-only crate; see `benches/engines.rs`.
