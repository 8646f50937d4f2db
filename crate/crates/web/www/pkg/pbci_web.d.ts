/* tslint:disable */
/* eslint-disable */

/**
 * Axiom verdicts, the order diagram and the two parts.
 */
export function analyze(text: string): string;

/**
 * The same algebra with its arrows swapped.
 */
export function dagger(text: string): string;

/**
 * The decomposition report, plus a one-line verdict.
 */
export function decomposition(text: string): string;

/**
 * The built-in six-element example as algebra text.
 */
export function example(): string;

/**
 * A lattice of the algebra with its identity checks. `kind` is
 * `filters`, `prefilters` or `congruences`.
 */
export function lattice(text: string, kind: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly analyze: (a: number, b: number) => [number, number];
    readonly dagger: (a: number, b: number) => [number, number];
    readonly decomposition: (a: number, b: number) => [number, number];
    readonly example: () => [number, number];
    readonly lattice: (a: number, b: number, c: number, d: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
