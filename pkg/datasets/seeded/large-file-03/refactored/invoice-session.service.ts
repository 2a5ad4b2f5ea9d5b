import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class InvoiceSessionService {
  run(event: string) { return event + 'session'; }
}
