import { Component, Input, input } from '@angular/core';

@Component({
  selector: 'app-ticket-card',
  template: `<div>{{ name }}</div>`
})
export class TicketCardComponent {
  @Input() name!: string;
  @Input() age!: number;
  @Input() email!: string;
  @Input() role!: string;
  @Input() isActive!: boolean;
  @Input() showAvatar!: boolean;
  @Input() highlight!: boolean;
  @Input() locale!: string;
  @Input() theme!: string;
  @Input() compact!: boolean;
}
