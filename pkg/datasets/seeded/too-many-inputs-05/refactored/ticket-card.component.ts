import { Component, Input, input } from '@angular/core';

export interface TicketCardConfig {
  name: string;
  age: number;
  email: string;
  role: string;
  isActive: boolean;
  showAvatar: boolean;
  highlight: boolean;
  locale: string;
  theme: string;
  compact: boolean;
}

@Component({
  selector: 'app-ticket-card',
  template: `<div>{{ config.name }}</div>`
})
export class TicketCardComponent {
  @Input() config!: TicketCardConfig;
}
