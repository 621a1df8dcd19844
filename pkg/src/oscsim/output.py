"""Trajectory and report serialization.

Everything written here is byte-deterministic for a given config and
environment: fixed float rendering in CSV (17 significant digits, which
round-trips binary64 exactly), sorted keys in JSON, and a pinned hash
salt plus no timestamp in SVG output.
"""

from __future__ import annotations

import json

import numpy as np

from .scenario import populations_of

_FLOAT = "%.16e"


def _scheme_qp(traj):
    """Uniform phase-space columns for any scheme: q = sqrt(2) Re z,
    p = sqrt(2) Im z of the amplitudes the trajectory carries."""
    from .oscillator import amplitudes_from_states, doubled_amplitudes
    if np.iscomplexobj(traj.states):
        z = traj.states
    elif traj.label == "doubled":
        z = doubled_amplitudes(traj.states)
    else:
        z = amplitudes_from_states(traj.states)
    root2 = np.sqrt(2.0)
    return root2 * z.real, root2 * z.imag


def emit_csv(results, path):
    """Write all trajectories of one run to a CSV file.

    Columns: t, populations per scheme, then interleaved q/p pairs per
    scheme.  All trajectories must share one time grid.
    """
    if not results:
        raise ValueError("no trajectories to write")
    schemes = list(results)
    times = results[schemes[0]].times
    for scheme in schemes[1:]:
        if not np.array_equal(results[scheme].times, times):
            raise ValueError("trajectories do not share a time grid")

    header = ["t"]
    columns = [times]
    for scheme in schemes:
        pops = populations_of(results[scheme])
        for n in range(pops.shape[1]):
            header.append(f"P{n + 1}_{scheme}")
            columns.append(pops[:, n])
    for scheme in schemes:
        q, p = _scheme_qp(results[scheme])
        for n in range(q.shape[1]):
            header.append(f"q{n + 1}_{scheme}")
            columns.append(q[:, n])
            header.append(f"p{n + 1}_{scheme}")
            columns.append(p[:, n])

    table = np.column_stack(columns)
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in table:
            fh.write(",".join(_FLOAT % value for value in row) + "\n")


def read_csv(path):
    """Inverse of emit_csv: (header list, value array)."""
    with open(path, encoding="ascii") as fh:
        header = fh.readline().strip().split(",")
        values = [[float(x) for x in line.strip().split(",")]
                  for line in fh if line.strip()]
    return header, np.array(values)


def emit_report(report, path):
    """Machine-readable agreement summary as JSON."""
    with open(path, "w", encoding="ascii", newline="") as fh:
        json.dump(report.as_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def _deterministic_svg(fig, path):
    import matplotlib
    with matplotlib.rc_context({"svg.hashsalt": "oscsim"}):
        fig.savefig(path, format="svg", metadata={"Date": None})


def emit_plot(results, report, path, title=None):
    """Render populations per scheme plus a difference panel as SVG.

    A gate-only run gets a bar chart of its final basis populations
    instead of time traces.
    """
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    schemes = list(results)
    if schemes == ["gate"]:
        fig, ax = plt.subplots(figsize=(4.8, 3.2))
        final = populations_of(results["gate"])[-1]
        n_qubits = int(np.log2(final.shape[0]))
        labels = [format(i, f"0{n_qubits}b") for i in range(final.shape[0])]
        ax.bar(range(final.shape[0]), final, color="#336699")
        ax.set_xticks(range(final.shape[0]), labels)
        ax.set_xlabel("basis state")
        ax.set_ylabel("final population")
        if title:
            ax.set_title(title)
        fig.tight_layout()
        _deterministic_svg(fig, path)
        plt.close(fig)
        return

    evolved = [s for s in schemes if s != "gate"]
    n_panels = len(evolved) + (1 if len(evolved) >= 2 else 0)
    fig, axes = plt.subplots(1, n_panels,
                             figsize=(3.6 * n_panels, 3.0), squeeze=False)
    axes = axes[0]
    for ax, scheme in zip(axes, evolved):
        traj = results[scheme]
        pops = populations_of(traj)
        for n in range(pops.shape[1]):
            ax.plot(traj.times, pops[:, n], label=f"P{n + 1}")
        ax.set_title(scheme)
        ax.set_xlabel("t")
        ax.set_ylabel("population")
        ax.legend(loc="best", fontsize="small")
    if len(evolved) >= 2:
        ax = axes[-1]
        times = results[evolved[0]].times
        for i, a in enumerate(evolved):
            for b in evolved[i + 1:]:
                diff = np.max(np.abs(populations_of(results[a])
                                     - populations_of(results[b])), axis=1)
                ax.plot(times, diff, label=f"{a} vs {b}")
        ax.set_title("difference")
        ax.set_xlabel("t")
        ax.set_ylabel("max |dP|")
        ax.legend(loc="best", fontsize="small")
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    _deterministic_svg(fig, path)
    plt.close(fig)
