"""Tour of the twelve motion families the simulator produces.

For each family this samples one random scene, rolls out the closed-form
trajectory, and prints a couple of physically meaningful checkpoints so you
can see the dynamics doing what their names promise.  One rendered mask per
family lands in demo_out/masks/ as a PGM you can open with any image viewer.

Run from the repository root:

    python3 demos/01_simulate_motions.py
"""

from pathlib import Path

import numpy as np

from newtondyn import MotionType, sample_dataset, simulate
from newtondyn.datasets import write_pgm

OUT = Path(__file__).resolve().parent / "demo_out" / "masks"


def describe(mt, spec, traj):
    z = traj.states_array()          # (25, 9): x y vx vy theta omega s l a
    t = traj.timestamps
    speed = np.hypot(z[:, 2], z[:, 3])
    lines = [f"  start ({z[0, 0]:.2f}, {z[0, 1]:.2f}) m, "
             f"end ({z[-1, 0]:.2f}, {z[-1, 1]:.2f}) m"]

    if mt is MotionType.UNIFORM_VELOCITY:
        lines.append(f"  speed stays {speed.min():.3f}..{speed.max():.3f} m/s")
    elif mt in (MotionType.UNIFORM_ACCELERATION, MotionType.DECELERATION):
        lines.append(f"  speed {speed[0]:.2f} -> {speed[-1]:.2f} m/s")
    elif mt in (MotionType.PARABOLIC, MotionType.PARABOLIC_WITH_ROTATION):
        apex = t[np.argmax(z[:, 1])]
        lines.append(f"  apex at t={apex:.2f}s, vy {z[0, 3]:+.2f} -> {z[-1, 3]:+.2f} m/s")
    elif mt is MotionType.SLOPE_SLIDING:
        ax = np.diff(z[:, 2]) / np.diff(t)
        lines.append(f"  constant horizontal acceleration ~{ax.mean():.2f} m/s^2")
    elif mt is MotionType.CIRCULAR:
        mp = spec.world.motion_params
        r = np.hypot(z[:, 0] - mp["pivot_x"], z[:, 1] - mp["pivot_y"])
        lines.append(f"  radius stays {r.min():.3f}..{r.max():.3f} m")
    elif mt is MotionType.ROTATION:
        lines.append(f"  angle {z[0, 4]:.2f} -> {z[-1, 4]:.2f} rad "
                     f"at {z[0, 5]:.2f} rad/s")
    elif mt is MotionType.DAMPED_OSCILLATION:
        lines.append(f"  released at {z[0, 4]:+.2f} rad, peak swing rate "
                     f"{np.abs(z[:, 5]).max():.2f} rad/s")
    elif mt is MotionType.SIZE_CHANGING:
        lines.append(f"  area {z[0, 8]:.4f} -> {z[-1, 8]:.4f} m^2, centroid fixed")
    elif mt is MotionType.MOTION_3D:
        lines.append(f"  translating while axes grow "
                     f"{z[0, 7]:.3f} -> {z[-1, 7]:.3f} m")
    elif mt is MotionType.DEFORMATION:
        lines.append(f"  aspect {z[0, 7] / z[0, 6]:.2f} -> {z[-1, 7] / z[-1, 6]:.2f} "
                     f"at constant area {z[0, 8]:.4f} m^2")
    return lines


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for i, mt in enumerate(MotionType):
        spec = sample_dataset(mt, 1, seed=40 + i)[0]
        traj = simulate(spec, with_masks=True)
        print(f"{mt.value} ({spec.shape.kind.value} {spec.shape.dims})")
        for line in describe(mt, spec, traj):
            print(line)
        write_pgm(OUT / f"{mt.value}.pgm", traj.masks[len(traj.masks) // 2])
    print(f"\nmid-clip masks written to {OUT}/")


if __name__ == "__main__":
    main()
