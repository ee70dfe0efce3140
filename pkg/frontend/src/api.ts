// Thin typed client over the session endpoints; all errors surface as
// ApiError with the server's detail payload intact.

import type { HintsMap, RejectionDetail, SessionView, TranscriptJson } from "./types.js";

export class ApiError extends Error {
  status: number;
  detail: unknown;

  constructor(status: number, detail: unknown) {
    super(typeof detail === "string" ? detail : JSON.stringify(detail));
    this.status = status;
    this.detail = detail;
  }

  rejection(): RejectionDetail | null {
    if (
      this.detail &&
      typeof this.detail === "object" &&
      "clique" in (this.detail as Record<string, unknown>)
    ) {
      return this.detail as RejectionDetail;
    }
    return null;
  }
}

async function parse(resp: Response): Promise<unknown> {
  const body = await resp.json().catch(() => null);
  if (!resp.ok) {
    const detail =
      body && typeof body === "object" && "detail" in body
        ? (body as { detail: unknown }).detail
        : body;
    throw new ApiError(resp.status, detail);
  }
  return body;
}

export interface CreateSessionBody {
  k: number;
  c: number;
  graph?: unknown;
  fixture?: string;
  generator?: Record<string, unknown>;
}

export class ApiClient {
  constructor(readonly base: string) {}

  private url(path: string): string {
    return this.base.replace(/\/$/, "") + path;
  }

  async createSession(body: CreateSessionBody): Promise<SessionView> {
    const resp = await fetch(this.url("/sessions"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return (await parse(resp)) as SessionView;
  }

  async getSession(id: string): Promise<SessionView> {
    return (await parse(await fetch(this.url(`/sessions/${id}`)))) as SessionView;
  }

  async submitMove(
    id: string,
    move: { vertex: number; color: number; ply: number },
  ): Promise<SessionView> {
    const resp = await fetch(this.url(`/sessions/${id}/moves`), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(move),
    });
    return (await parse(resp)) as SessionView;
  }

  async hints(id: string): Promise<HintsMap> {
    const body = (await parse(await fetch(this.url(`/sessions/${id}/hints`)))) as {
      hints: HintsMap;
    };
    return body.hints;
  }

  async transcript(id: string): Promise<TranscriptJson> {
    return (await parse(
      await fetch(this.url(`/sessions/${id}/transcript`)),
    )) as TranscriptJson;
  }
}
