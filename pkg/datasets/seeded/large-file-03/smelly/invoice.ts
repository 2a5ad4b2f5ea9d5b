import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-invoice-header', template: `<p>{{ title }}</p>` })
export class InvoiceHeaderComponent { title = 'Invoice header'; }

@Component({ selector: 'app-invoice-footer', template: `<p>{{ title }}</p>` })
export class InvoiceFooterComponent { title = 'Invoice footer'; }

@Injectable({ providedIn: 'root' })
export class InvoiceAnalyticsService {
  run(event: string) { return event + 'analytics'; }
}

@Injectable({ providedIn: 'root' })
export class InvoiceSessionService {
  run(event: string) { return event + 'session'; }
}

@Component({ selector: 'app-invoice-sidebar', template: `<p>{{ title }}</p>` })
export class InvoiceSidebarComponent { title = 'Invoice sidebar'; }
