// Advisory countdown: renders seconds from the server-provided snapshot and
// fires once when it crosses zero.  The server clock is authoritative; this
// only schedules the reconciliation poll and the on-screen number.

export class Countdown {
  private timer: ReturnType<typeof setInterval> | null = null;
  private endAt: number | null = null;

  constructor(
    private readonly onTick: (secondsLeft: number) => void,
    private readonly onExpire: () => void,
    private readonly now: () => number = () => Date.now(),
  ) {}

  /** Arm from a view's seconds_left snapshot (tolerates client clock skew). */
  arm(secondsLeft: number | null): void {
    this.clear();
    if (secondsLeft === null) return;
    this.endAt = this.now() + secondsLeft * 1000;
    this.timer = setInterval(() => this.tick(), 250);
    this.tick();
  }

  clear(): void {
    if (this.timer !== null) clearInterval(this.timer);
    this.timer = null;
    this.endAt = null;
  }

  private tick(): void {
    if (this.endAt === null) return;
    const left = (this.endAt - this.now()) / 1000;
    if (left <= 0) {
      this.clear();
      this.onTick(0);
      this.onExpire();
    } else {
      this.onTick(left);
    }
  }
}
